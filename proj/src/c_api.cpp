#include "quasipf/quasipf.h"

#include <new>
#include <string>

#include "json_io.hpp"
#include "quasipf/btoda.hpp"
#include "quasipf/classical_pfaffian.hpp"
#include "quasipf/quasipfaffian.hpp"
#include "quasipf/random.hpp"
#include "quasipf/skewsolve.hpp"
#include "quasipf/skoly.hpp"
#include "suites.hpp"

struct qpf_result {
  std::string json;
  std::string text;
  bool passed = false;
};

struct qpf_system {
  qpf::SkewSystem sys;
};

namespace {

using nlohmann::json;
namespace jio = qpf::json_io;

thread_local std::string g_last_error;

qpf_status status_of(qpf::ErrorCode c) {
  switch (c) {
    case qpf::ErrorCode::BadInput: return QPF_BAD_INPUT;
    case qpf::ErrorCode::Singular:
    case qpf::ErrorCode::SingularMinor: return QPF_SINGULAR;
    case qpf::ErrorCode::TagMismatch: return QPF_TAG_MISMATCH;
    case qpf::ErrorCode::DimMismatch: return QPF_DIM_MISMATCH;
    case qpf::ErrorCode::TooLarge: return QPF_TOO_LARGE;
  }
  return QPF_INTERNAL;
}

template <class F>
qpf_status guarded(F&& f) {
  g_last_error.clear();
  try {
    return f();
  } catch (const qpf::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
  } catch (const std::exception& e) {
    g_last_error = e.what();
  } catch (...) {
    g_last_error = "unknown failure";
  }
  return QPF_INTERNAL;
}

qpf_status emit(const json& doc, std::string text, bool passed, qpf_result** out) {
  auto* r = new qpf_result;
  r->json = doc.dump(2) + "\n";
  r->text = std::move(text);
  r->passed = passed;
  *out = r;
  if (!passed) g_last_error = "verification failed";
  return passed ? QPF_OK : QPF_VERIFY_FAILED;
}

std::string join(const std::vector<qpf::RingElem>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + qpf::to_string(v[i]);
  return s + ")";
}

qpf::suites::Config to_config(const qpf_config* c) {
  if (!c) throw qpf::Error(qpf::ErrorCode::BadInput, "null config");
  qpf::suites::Config cfg;
  cfg.spec.kind = qpf::parse_ring_kind(c->ring ? c->ring : "");
  cfg.spec.block_dim = cfg.spec.kind == qpf::RingKind::Block ? c->block_dim : 1;
  if (cfg.spec.block_dim < 1) throw qpf::Error(qpf::ErrorCode::BadInput, "block dimension must be positive");
  cfg.n_max = c->n;
  cfg.nodes = c->nodes;
  cfg.seed = c->seed;
  cfg.instances = c->instances;
  if (cfg.n_max < 1) throw qpf::Error(qpf::ErrorCode::BadInput, "n must be at least 1");
  if (cfg.nodes < 0) throw qpf::Error(qpf::ErrorCode::BadInput, "node count must be non-negative");
  return cfg;
}

int node_count(const qpf::suites::Config& cfg) {
  return cfg.nodes > 0 ? cfg.nodes : qpf::suites::default_nodes(cfg.n_max);
}

json classical_pfaffian(const json& doc, std::string& text) {
  const qpf::Matrix<qpf::RingElem> m = jio::matrix(doc);
  if (m.rows() != m.cols()) throw qpf::Error(qpf::ErrorCode::DimMismatch, "Pfaffian of non-square matrix");
  if (!m.empty() && m(0, 0).kind() != qpf::RingKind::Rational) {
    throw qpf::Error(qpf::ErrorCode::TagMismatch, "classical Pfaffian needs \"ring\": \"rational\"");
  }
  qpf::Matrix<qpf::Rational> a(m.rows(), m.cols(), qpf::Rational(0));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) a(r, c) = m(r, c).as_rational();
  if (!qpf::is_skew(a)) throw qpf::Error(qpf::ErrorCode::BadInput, "matrix is not skew-symmetric");
  const bool expand = a.rows() <= qpf::kMaxExpandSize;
  const qpf::Rational pf = expand ? qpf::pf_expand(a) : qpf::pf_condense(a);
  text = qpf::to_string(pf) + "\n";
  return {{"pfaffian", jio::encode(pf)}, {"method", expand ? "expand" : "condense"}, {"size", a.rows()}};
}

json quasi_pfaffian(const json& doc, std::string& text) {
  const jio::QpfRequest req = jio::qpf_request(doc);
  qpf::TableOracle<qpf::RingElem> o(req.entries, req.rhs, req.moments);
  o.set_c_row(req.c_row);
  const qpf::QuasiPfaffian<qpf::RingElem> pf(o, req.body);
  json out;
  out["boxed"] = {qpf::to_string(req.p), qpf::to_string(req.q)};
  if (req.q.kind == qpf::Label::Kind::X) {
    const auto poly = pf.poly(req.p);
    out["coefficients"] = jio::encode(poly.coeffs());
    text = "coefficients " + join(poly.coeffs()) + "\n";
  } else {
    const qpf::RingElem v = pf(req.p, req.q);
    out["value"] = jio::encode(v);
    text = qpf::to_string(v) + "\n";
  }
  return out;
}

}  // namespace

extern "C" {

void qpf_config_init(qpf_config* cfg) {
  if (!cfg) return;
  cfg->ring = "block";
  cfg->block_dim = 2;
  cfg->n = 2;
  cfg->nodes = 0;
  cfg->seed = 7;
  cfg->instances = 3;
}

const char* qpf_status_string(qpf_status s) {
  switch (s) {
    case QPF_OK: return "ok";
    case QPF_BAD_INPUT: return "bad input";
    case QPF_SINGULAR: return "singular";
    case QPF_TAG_MISMATCH: return "ring tag mismatch";
    case QPF_DIM_MISMATCH: return "dimension mismatch";
    case QPF_TOO_LARGE: return "too large";
    case QPF_VERIFY_FAILED: return "verification failed";
    case QPF_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* qpf_last_error(void) { return g_last_error.c_str(); }

qpf_status qpf_system_load(const char* json_text, qpf_system** out) {
  return guarded([&] {
    if (!json_text || !out) throw qpf::Error(qpf::ErrorCode::BadInput, "null argument");
    *out = new qpf_system{jio::system(jio::parse(json_text))};
    return QPF_OK;
  });
}

int qpf_system_size(const qpf_system* sys) { return sys ? sys->sys.size() : 0; }

qpf_status qpf_system_solve(const qpf_system* sys, const char* method, qpf_result** out) {
  return guarded([&] {
    if (!sys || !method || !out) throw qpf::Error(qpf::ErrorCode::BadInput, "null argument");
    const std::string m = method;
    if (m != "direct" && m != "qpf" && m != "both") {
      throw qpf::Error(qpf::ErrorCode::BadInput, "method must be direct, qpf or both");
    }
    json doc;
    doc["method"] = m;
    std::vector<qpf::RingElem> x;
    bool agree = true;
    if (m == "direct" || m == "both") {
      x = qpf::solve_direct(sys->sys);
      doc["direct"] = jio::encode(x);
    }
    if (m == "qpf" || m == "both") {
      const auto y = qpf::solve_qpf(sys->sys);
      doc["qpf"] = jio::encode(y);
      if (!x.empty()) {
        for (size_t i = 0; i < x.size(); ++i) agree = agree && (x[i] - y[i]).is_zero();
      }
      x = y;
    }
    bool zero = true;
    for (const auto& r : qpf::solve_residual(sys->sys, x)) zero = zero && r.is_zero();
    doc["x"] = jio::encode(x);
    doc["methods_agree"] = agree;
    doc["residual_is_zero"] = zero;
    return emit(doc, "x = " + join(x) + "\n", agree && zero, out);
  });
}

void qpf_system_free(qpf_system* sys) { delete sys; }

qpf_status qpf_pfaffian(const char* json_text, qpf_result** out) {
  return guarded([&] {
    if (!json_text || !out) throw qpf::Error(qpf::ErrorCode::BadInput, "null argument");
    const json doc = jio::parse(json_text);
    std::string text;
    const bool quasi = doc.is_object() && doc.contains("boxed");
    const json res = quasi ? quasi_pfaffian(doc, text) : classical_pfaffian(doc, text);
    return emit(res, std::move(text), true, out);
  });
}

qpf_status qpf_verify(const qpf_config* c, const char* suite, qpf_result** out) {
  return guarded([&] {
    if (!suite || !out) throw qpf::Error(qpf::ErrorCode::BadInput, "null argument");
    const auto cfg = to_config(c);
    const auto rep = qpf::suites::run(suite, cfg);
    return emit(qpf::suites::to_json(rep, cfg, suite), qpf::suites::to_text(rep), rep.passed(), out);
  });
}

qpf_status qpf_btoda(const qpf_config* c, qpf_result** out) {
  return guarded([&] {
    if (!out) throw qpf::Error(qpf::ErrorCode::BadInput, "null argument");
    const auto cfg = to_config(c);
    qpf::InstanceGenerator g(cfg.seed);
    const qpf::MomentState ms = g.moment_state(cfg.spec, node_count(cfg));
    json states = json::array();
    for (int n = 1; n <= cfg.n_max; ++n) {
      const qpf::BTodaState st = qpf::build_state(ms, n);
      json s;
      s["n"] = n;
      s["u"] = jio::encode(st.u.value());
      s["sigma"] = jio::encode(st.sigma.value());
      s["sigma_tilde"] = jio::encode(st.sigma_t.value());
      s["sigma_hat"] = jio::encode(st.sigma_h.value());
      s["sigma_tilde_hat"] = jio::encode(st.sigma_th.value());
      s["v"] = jio::encode(st.v.value());
      s["r"] = jio::encode(st.r.value());
      s["A"] = jio::encode(st.A.value());
      s["B"] = jio::encode(st.B.value());
      s["C"] = jio::encode(st.C.value());
      s["D"] = jio::encode(st.D.value());
      states.push_back(std::move(s));
    }
    const auto rep = qpf::suites::run("btoda", cfg);
    json doc = qpf::suites::to_json(rep, cfg, "btoda");
    doc["measure"] = jio::encode(ms);
    doc["states"] = std::move(states);
    return emit(doc, qpf::suites::to_text(rep), rep.passed(), out);
  });
}

qpf_status qpf_sop(const qpf_config* c, qpf_result** out) {
  return guarded([&] {
    if (!out) throw qpf::Error(qpf::ErrorCode::BadInput, "null argument");
    const auto cfg = to_config(c);
    qpf::InstanceGenerator g(cfg.seed);
    const qpf::MomentState ms = g.moment_state(cfg.spec, node_count(cfg));
    const qpf::SOPFamily fam = qpf::build_family(ms, cfg.n_max);
    json polys = json::array();
    std::string table;
    for (int m = 0; m <= 2 * cfg.n_max + 1; ++m) {
      const auto p = qpf::poly_value(fam.P(m));
      polys.push_back({{"index", m}, {"degree", p.degree()}, {"coefficients", jio::encode(p.coeffs())}});
      table += "P_" + std::to_string(m) + " " + join(p.coeffs()) + "\n";
    }
    const auto rep = qpf::suites::run("sop", cfg);
    json doc = qpf::suites::to_json(rep, cfg, "sop");
    doc["measure"] = jio::encode(ms);
    doc["polynomials"] = std::move(polys);
    return emit(doc, table + qpf::suites::to_text(rep), rep.passed(), out);
  });
}

int qpf_suite_count(void) { return static_cast<int>(qpf::suites::names().size()); }

const char* qpf_suite_name(int i) {
  const auto& n = qpf::suites::names();
  if (i < 0 || i >= static_cast<int>(n.size())) return nullptr;
  return n[i].c_str();
}

const char* qpf_result_json(const qpf_result* r) { return r ? r->json.c_str() : ""; }
const char* qpf_result_text(const qpf_result* r) { return r ? r->text.c_str() : ""; }
int qpf_result_passed(const qpf_result* r) { return r && r->passed ? 1 : 0; }
void qpf_result_free(qpf_result* r) { delete r; }

}  // extern "C"
