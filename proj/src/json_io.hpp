#pragma once

// JSON encodings for inputs and reports. Internal to the library and CLI.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "quasipf/labels.hpp"
#include "quasipf/matrix.hpp"
#include "quasipf/moments.hpp"
#include "quasipf/ring.hpp"
#include "quasipf/skewsolve.hpp"

namespace qpf::json_io {

using nlohmann::json;

/// Parses text, mapping syntax errors to BadInput.
json parse(std::string_view text);

RingSpec ring_spec(const json& j);  // "ring" and optional "block_dim"
void put_ring_spec(json& j, const RingSpec& spec);

/// Rational "p/q" (or integer), quaternion [w,x,y,z], block [[...],...].
/// Plain JSON integers are accepted for rationals.
Rational rational(const json& j);
RingElem element(const json& j, const RingSpec& spec);
json encode(const Rational& q);
json encode(const RingElem& e);
json encode(const std::vector<RingElem>& v);

/// {"ring", "block_dim"?, "rows", "cols", "entries": [[...]]}
Matrix<RingElem> matrix(const json& j);
json encode(const Matrix<RingElem>& m);

/// Matrix fields plus "rhs": [...].
SkewSystem system(const json& j);

/// {"nodes", "weights", "snapshot", "ring", "block_dim"?}
MomentState measure(const json& j);
json encode(const MomentState& s);

/// {"ring", "block_dim"?, "body": [labels], "boxed": [p, q],
///  "oracle": {"entries": [[...]], "rhs"?: [...], "moments"?: [...],
///             "c_row"?: "skew"|"unit"}}
/// Body labels index the 1-based entry table.
struct QpfRequest {
  RingSpec spec;
  std::vector<Label> body;
  Label p, q;
  Matrix<RingElem> entries;
  std::vector<RingElem> rhs, moments;
  CRow c_row = CRow::Skew;
};
QpfRequest qpf_request(const json& j);

}  // namespace qpf::json_io
