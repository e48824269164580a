#include "json_io.hpp"

namespace qpf::json_io {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorCode::BadInput, msg); }

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) bad(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

int int_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_number_integer()) bad(std::string("field \"") + name + "\" must be an integer");
  return v.get<int>();
}

std::vector<RingElem> elements(const json& j, const RingSpec& spec, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  std::vector<RingElem> out;
  for (const auto& e : j) out.push_back(element(e, spec));
  return out;
}

Label label(const json& j) {
  if (j.is_number_integer()) return Label::body(j.get<int>());
  if (j.is_string()) return parse_label(j.get<std::string>());
  bad("label must be an integer or a string");
}

}  // namespace

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

RingSpec ring_spec(const json& j) {
  RingSpec spec;
  const json& r = field(j, "ring");
  if (!r.is_string()) bad("field \"ring\" must be a string");
  spec.kind = parse_ring_kind(r.get<std::string>());
  if (spec.kind == RingKind::Block) {
    spec.block_dim = j.contains("block_dim") ? int_field(j, "block_dim") : 2;
    if (spec.block_dim < 1) bad("block_dim must be positive");
  }
  return spec;
}

void put_ring_spec(json& j, const RingSpec& spec) {
  j["ring"] = to_string(spec.kind);
  if (spec.kind == RingKind::Block) j["block_dim"] = spec.block_dim;
}

Rational rational(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  bad("rational must be a string \"p/q\" or an integer");
}

RingElem element(const json& j, const RingSpec& spec) {
  switch (spec.kind) {
    case RingKind::Rational: return rational(j);
    case RingKind::Quaternion: {
      if (!j.is_array() || j.size() != 4) bad("quaternion must be an array of 4 rationals");
      return Quaternion{rational(j[0]), rational(j[1]), rational(j[2]), rational(j[3])};
    }
    case RingKind::Block: {
      const int m = spec.block_dim;
      if (!j.is_array() || static_cast<int>(j.size()) != m) bad("block must have block_dim rows");
      std::vector<Rational> e;
      for (const auto& row : j) {
        if (!row.is_array() || static_cast<int>(row.size()) != m) bad("block row must have block_dim entries");
        for (const auto& x : row) e.push_back(rational(x));
      }
      return Block(m, std::move(e));
    }
  }
  bad("unknown ring");
}

json encode(const Rational& q) { return to_string(q); }

json encode(const RingElem& e) {
  switch (e.kind()) {
    case RingKind::Rational: return encode(e.as_rational());
    case RingKind::Quaternion: {
      const Quaternion& q = e.as_quaternion();
      return json::array({encode(q.w), encode(q.x), encode(q.y), encode(q.z)});
    }
    case RingKind::Block: {
      const Block& b = e.as_block();
      json rows = json::array();
      for (int r = 0; r < b.dim(); ++r) {
        json row = json::array();
        for (int c = 0; c < b.dim(); ++c) row.push_back(encode(b(r, c)));
        rows.push_back(std::move(row));
      }
      return rows;
    }
  }
  return nullptr;
}

json encode(const std::vector<RingElem>& v) {
  json a = json::array();
  for (const auto& e : v) a.push_back(encode(e));
  return a;
}

Matrix<RingElem> matrix(const json& j) {
  const RingSpec spec = ring_spec(j);
  const int rows = int_field(j, "rows");
  const int cols = int_field(j, "cols");
  if (rows < 0 || cols < 0) bad("matrix dimensions must be non-negative");
  const json& e = field(j, "entries");
  if (!e.is_array() || static_cast<int>(e.size()) != rows) bad("entries must have \"rows\" rows");
  Matrix<RingElem> m(rows, cols, RingElem::zero(spec));
  for (int r = 0; r < rows; ++r) {
    if (!e[r].is_array() || static_cast<int>(e[r].size()) != cols) {
      throw Error(ErrorCode::DimMismatch, "row " + std::to_string(r + 1) + " does not have \"cols\" entries");
    }
    for (int c = 0; c < cols; ++c) m(r, c) = element(e[r][c], spec);
  }
  return m;
}

json encode(const Matrix<RingElem>& m) {
  json j;
  if (!m.empty()) put_ring_spec(j, m(0, 0).spec());
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(encode(m(r, c)));
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j;
}

SkewSystem system(const json& j) {
  SkewSystem sys{matrix(j), elements(field(j, "rhs"), ring_spec(j), "rhs")};
  sys.validate();
  return sys;
}

MomentState measure(const json& j) {
  const RingSpec spec = ring_spec(j);
  DiscreteMeasure m;
  m.ring = spec;
  const json& nodes = field(j, "nodes");
  if (!nodes.is_array()) bad("nodes must be an array");
  for (const auto& x : nodes) m.nodes.push_back(rational(x));
  m.weights = elements(field(j, "weights"), spec, "weights");
  Snapshot s;
  const json& snap = field(j, "snapshot");
  if (!snap.is_array()) bad("snapshot must be an array");
  for (const auto& x : snap) s.values.push_back(rational(x));
  return MomentState(std::move(m), std::move(s));
}

json encode(const MomentState& s) {
  json j;
  put_ring_spec(j, s.ring());
  json nodes = json::array(), snap = json::array();
  for (const auto& x : s.measure().nodes) nodes.push_back(encode(x));
  for (const auto& x : s.snapshot().values) snap.push_back(encode(x));
  j["nodes"] = std::move(nodes);
  j["weights"] = encode(s.measure().weights);
  j["snapshot"] = std::move(snap);
  return j;
}

QpfRequest qpf_request(const json& j) {
  QpfRequest r;
  r.spec = ring_spec(j);
  const json& body = field(j, "body");
  if (!body.is_array()) bad("body must be an array of labels");
  for (const auto& l : body) r.body.push_back(label(l));
  const json& boxed = field(j, "boxed");
  if (!boxed.is_array() || boxed.size() != 2) bad("boxed must be a pair of labels");
  r.p = label(boxed[0]);
  r.q = label(boxed[1]);

  const json& o = field(j, "oracle");
  const json& e = field(o, "entries");
  if (!e.is_array() || e.empty()) bad("oracle entries must be a non-empty square table");
  const int n = static_cast<int>(e.size());
  r.entries = Matrix<RingElem>(n, n, RingElem::zero(r.spec));
  for (int i = 0; i < n; ++i) {
    if (!e[i].is_array() || static_cast<int>(e[i].size()) != n) {
      throw Error(ErrorCode::DimMismatch, "oracle entries must be square");
    }
    for (int k = 0; k < n; ++k) r.entries(i, k) = element(e[i][k], r.spec);
  }
  if (o.contains("rhs")) r.rhs = elements(o.at("rhs"), r.spec, "rhs");
  if (o.contains("moments")) r.moments = elements(o.at("moments"), r.spec, "moments");
  if (o.contains("c_row")) {
    const std::string c = o.at("c_row").is_string() ? o.at("c_row").get<std::string>() : "";
    if (c == "skew") {
      r.c_row = CRow::Skew;
    } else if (c == "unit") {
      r.c_row = CRow::Unit;
    } else {
      bad("c_row must be \"skew\" or \"unit\"");
    }
  }
  return r;
}

}  // namespace qpf::json_io
