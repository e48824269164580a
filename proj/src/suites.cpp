#include "suites.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

#include "json_io.hpp"
#include "quasipf/btoda.hpp"
#include "quasipf/classical_pfaffian.hpp"
#include "quasipf/derivatives.hpp"
#include "quasipf/quasipfaffian.hpp"
#include "quasipf/random.hpp"
#include "quasipf/skewsolve.hpp"
#include "quasipf/skoly.hpp"

namespace qpf::suites {

namespace {

constexpr int kAttempts = 16;

using Rows = std::vector<Row>;
using L = Label;

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) h = (h ^ c) * 0x100000001b3ULL;
  return h;
}

class Runner {
 public:
  Runner(const Config& cfg, Report& out) : cfg_(cfg), out_(out) {}

  const Config& cfg() const { return cfg_; }
  Report& report() { return out_; }

  /// Runs body(seed) until it completes without a singular event.
  /// `k` distinguishes instances within one suite.
  void instance(const std::string& suite, int k, const std::function<Rows(std::uint64_t)>& body) {
    for (int a = 0; a < kAttempts; ++a) {
      const std::uint64_t s = instance_seed(cfg_.seed, suite, k, a);
      try {
        Rows rows = body(s);
        for (auto& r : rows) {
          r.suite = suite;
          r.seed = s;
        }
        out_.rows.insert(out_.rows.end(), rows.begin(), rows.end());
        return;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::SingularMinor && e.code() != ErrorCode::Singular) throw;
        ++out_.reseeds;
      }
    }
    ++out_.exhausted;
  }

 private:
  const Config& cfg_;
  Report& out_;
};

Row row(std::string theorem, int n, int i, int j, bool zero) {
  Row r;
  r.theorem = std::move(theorem);
  r.n = n;
  r.i = i;
  r.j = j;
  r.zero = zero;
  return r;
}

void add(Rows& rows, const std::vector<Residual>& rs, int n) {
  for (const auto& r : rs) rows.push_back(row(r.name, n, 0, 0, r.is_zero()));
}

int nodes_for(const Config& cfg) { return cfg.nodes > 0 ? cfg.nodes : default_nodes(cfg.n_max); }

Matrix<RingElem> lift(const Matrix<Rational>& a) {
  Matrix<RingElem> m(a.rows(), a.cols(), RingElem(Rational(0)));
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
  return m;
}

bool all_equal(const std::vector<RingElem>& a, const std::vector<RingElem>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!(a[i] - b[i]).is_zero()) return false;
  return true;
}

bool all_zero_elems(const std::vector<RingElem>& v) {
  return std::all_of(v.begin(), v.end(), [](const RingElem& e) { return e.is_zero(); });
}

void classical(Runner& run) {
  const std::string name = "classical";
  int k = 0;
  for (int size = 2; size <= 10; size += 2) {
    for (int m = 0; m < run.cfg().instances; ++m) {
      run.instance(name, k++, [size](std::uint64_t s) {
        InstanceGenerator g(s);
        const Matrix<Rational> a = g.skew_rational(size);
        const Rational pf = pf_expand(a);
        Rows rows;
        rows.push_back(row("pf_squared_is_det", size, 0, 0, pf * pf == det_bareiss(a)));
        rows.push_back(row("condense_matches_expand", size, 0, 0, pf_condense(a) == pf));
        return rows;
      });
    }
  }
  run.instance(name, k++, [](std::uint64_t) {
    Matrix<Rational> a(4, 4, Rational(0));
    const int v[6] = {1, 2, 3, 4, 5, 6};
    int p = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        a(i, j) = v[p++];
        a(j, i) = -a(i, j);
      }
    return Rows{row("canonical_4x4", 4, 0, 0, pf_expand(a) == 8)};
  });
  for (int size = 4; size <= 8; size += 2) {
    for (int m = 0; m < run.cfg().instances; ++m) {
      run.instance(name, k++, [size](std::uint64_t s) {
        InstanceGenerator g(s);
        return Rows{row("tanner", size, 0, 0, sgn(check_tanner(g.skew_rational(size))) == 0)};
      });
    }
  }
  const std::pair<int, int> perk_shapes[] = {{2, 0}, {2, 2}, {4, 2}};
  for (const auto& [bm, cn] : perk_shapes) {
    for (int m = 0; m < run.cfg().instances; ++m) {
      run.instance(name, k++, [bm = bm, cn = cn](std::uint64_t s) {
        InstanceGenerator g(s);
        std::vector<int> b, c;
        for (int i = 0; i <= bm; ++i) b.push_back(i);
        for (int i = 0; i <= cn; ++i) c.push_back(bm + 1 + i);
        const Rational r = check_perk(g.skew_rational(bm + cn + 2), b, c);
        return Rows{row("perk", bm + cn + 2, bm, cn, sgn(r) == 0)};
      });
    }
  }
}

void ratio(Runner& run) {
  const std::string name = "ratio";
  int k = 0;
  for (int n2 = 2; n2 <= 6; n2 += 2) {
    for (int m = 0; m < run.cfg().instances; ++m) {
      run.instance(name, k++, [n2](std::uint64_t s) {
        InstanceGenerator g(s);
        const Matrix<RingElem> a = lift(g.skew_rational(n2 + 2));
        const RingElem one(Rational(1));
        const RingElem den = pf_expand(a.block(0, 0, n2, n2), one);
        if (den.is_zero()) throw Error(ErrorCode::SingularMinor, "Pf(body) = 0");
        TableOracle<RingElem> o(a);
        const RingElem q = qpf_direct(o, body_range(1, n2), L::body(n2 + 1), L::body(n2 + 2));
        return Rows{row("ratio_law", n2, n2 + 1, n2 + 2, (q * den - pf_expand(a, one)).is_zero())};
      });
    }
  }
}

void condensation(Runner& run) {
  const std::string name = "condensation";
  const RingSpec spec = run.cfg().spec;
  int k = 0;
  for (int m2 = 2; m2 <= 8; m2 += 2) {
    for (int m = 0; m < run.cfg().instances; ++m) {
      run.instance(name, k++, [m2, spec](std::uint64_t s) {
        InstanceGenerator g(s);
        TableOracle<RingElem> o(g.skew_matrix(spec, m2 + 2));
        const auto body = body_range(1, m2);
        const L c = L::body(m2 + 1), d = L::body(m2 + 2);
        Rows rows;
        rows.push_back(row("condense_matches_direct", m2, m2 + 1, m2 + 2,
                           (qpf_condense(o, body, c, d) - qpf_direct(o, body, c, d)).is_zero()));
        const auto low = body_range(1, m2 - 2);
        const auto h = heredity_forms(o, low, L::body(m2 - 1), L::body(m2), c, d);
        rows.push_back(row("heredity_quasidet_form", m2, m2 + 1, m2 + 2, (h.quasidet_form - h.direct).is_zero()));
        rows.push_back(row("heredity_expanded_form", m2, m2 + 1, m2 + 2, (h.expanded_form - h.direct).is_zero()));
        return rows;
      });
    }
  }
}

void symmetry(Runner& run) {
  const std::string name = "symmetry";
  const RingSpec spec = run.cfg().spec;
  Report& rep = run.report();
  for (int m = 0; m < run.cfg().instances; ++m) {
    run.instance(name, m, [spec, &rep](std::uint64_t s) {
      InstanceGenerator g(s);
      std::vector<RingElem> rhs, moments;
      for (int i = 0; i < 8; ++i) rhs.push_back(g.element(spec));
      for (int i = 0; i < 12; ++i) moments.push_back(g.element(spec));
      TableOracle<RingElem> o(g.skew_matrix(spec, 8), rhs, moments);
      const auto body = body_range(1, 4);
      const QuasiPfaffian<RingElem> qp(o, body);
      const std::vector<L> ext = {L::body(5), L::body(6), L::d(0), L::d(1), L::c(5), L::b()};
      Rows rows;
      for (size_t a = 0; a < ext.size(); ++a) {
        for (size_t b = 0; b < ext.size(); ++b) {
          const RingElem r = qp(ext[a], ext[b]) + qp(ext[b], ext[a]).involute();
          rows.push_back(row("swap_symmetry", 4, static_cast<int>(a), static_cast<int>(b), r.is_zero()));
        }
      }
      for (int i = 1; i <= 4; ++i) {
        for (size_t b = 0; b < ext.size(); ++b) {
          const bool z = qp(L::body(i), ext[b]).is_zero() && qp(ext[b], L::body(i)).is_zero();
          rows.push_back(row("zero_condition", 4, i, static_cast<int>(b), z));
        }
      }
      if (!qp(L::body(5), L::body(5)).is_zero()) ++rep.diagonal_witnesses;
      return rows;
    });
  }
}

void derivatives(Runner& run) {
  const std::string name = "derivatives";
  const RingSpec spec = run.cfg().spec;
  const int nodes = nodes_for(run.cfg());
  int k = 0;
  for (int n = 1; n <= run.cfg().n_max; ++n) {
    for (int m = 0; m < run.cfg().instances; ++m) {
      run.instance(name, k++, [n, spec, nodes](std::uint64_t s) {
        InstanceGenerator g(s);
        const MomentState ms = g.moment_state(spec, nodes);
        std::vector<DerivativeReport> reps;
        const int e = 2 * n, f = 2 * n + 1;
        for (const auto& [i, j] : {std::pair{e, f}, std::pair{f, e}, std::pair{f, f}})
          reps.push_back(verify_wronskian_body(ms, n, i, j));
        for (int i : {e, f})
          for (int j : {0, 1}) reps.push_back(verify_wronskian_dlabel(ms, n, i, j));
        for (const auto& [i, j] : {std::pair{e, f}, std::pair{f, f}}) reps.push_back(verify_gram_body(ms, n, i, j));
        for (int i : {e, f}) reps.push_back(verify_gram_dlabel(ms, n, i));
        reps.push_back(verify_gram_commutator(ms, n));
        for (int i : {e, f})
          for (auto& r : verify_gram_c_labels(ms, n, i)) reps.push_back(std::move(r));
        Rows rows;
        for (const auto& r : reps) rows.push_back(row(r.theorem, r.n, r.i, r.j, r.passed()));
        if (spec.kind == RingKind::Rational) {
          rows.push_back(row("commutative_wronskian", n, 0, 0, verify_commutative_wronskian(ms, n).is_zero()));
        }
        return rows;
      });
    }
  }
}

void btoda(Runner& run) {
  const std::string name = "btoda";
  const RingSpec spec = run.cfg().spec;
  const int nodes = nodes_for(run.cfg());
  int k = 0;
  for (int n = 1; n <= run.cfg().n_max; ++n) {
    for (int m = 0; m < run.cfg().instances; ++m) {
      run.instance(name, k++, [n, spec, nodes](std::uint64_t s) {
        InstanceGenerator g(s);
        const MomentState ms = g.moment_state(spec, nodes);
        const BTodaState st = build_state(ms, n), next = build_state(ms, n + 1);
        Rows rows;
        add(rows, verify_u_recursion(st, next), n);
        add(rows, verify_v_recursion(st, next), n);
        add(rows, {verify_compatibility(st), check_abcd_inverse(st)}, n);
        return rows;
      });
      run.instance(name, k++, [n, nodes](std::uint64_t s) {
        InstanceGenerator g(s);
        const MomentState ms = g.moment_state(RingSpec{RingKind::Rational, 1}, nodes);
        Rows rows;
        add(rows, verify_commutative_btoda(ms, n), n);
        std::vector<Residual> red = verify_commutative_reduction(ms, n);
        for (auto& r : red) r.name = "reduction_" + r.name;
        add(rows, red, n);
        return rows;
      });
    }
  }
}

void sop(Runner& run) {
  const std::string name = "sop";
  const RingSpec spec = run.cfg().spec;
  const int nodes = nodes_for(run.cfg());
  const int n_max = run.cfg().n_max;
  for (int m = 0; m < run.cfg().instances; ++m) {
    run.instance(name, m, [n_max, spec, nodes](std::uint64_t s) {
      InstanceGenerator g(s);
      const SOPFamily fam = build_family(g.moment_state(spec, nodes), n_max);
      Rows rows;
      add(rows, verify_orthogonality(fam), n_max);
      for (int n = 1; n <= n_max; ++n) {
        add(rows, verify_derivative_formulas(fam, n), n);
        add(rows, verify_spectral(fam, n), n);
        add(rows, verify_recurrences(fam, n), n);
      }
      return rows;
    });
  }
}

void solver(Runner& run) {
  const std::string name = "solver";
  const RingSpec spec = run.cfg().spec;
  int k = 0;
  run.instance(name, k++, [](std::uint64_t) {
    SkewSystem sys{Matrix<RingElem>(2, 2, RingElem(Rational(0))), {RingElem(Rational(3)), RingElem(Rational(4))}};
    sys.a(0, 1) = Rational(2);
    sys.a(1, 0) = Rational(-2);
    const std::vector<RingElem> expect = {RingElem(Rational(-2)), RingElem(Rational(3, 2))};
    return Rows{row("worked_2x2", 2, 0, 0, all_equal(solve_qpf(sys), expect) && all_equal(solve_direct(sys), expect))};
  });
  for (int size = 2; size <= 8; size += 2) {
    for (int m = 0; m < run.cfg().instances; ++m) {
      run.instance(name, k++, [size, spec](std::uint64_t s) {
        InstanceGenerator g(s);
        SkewSystem sys{g.skew_matrix(spec, size), {}};
        for (int i = 0; i < size; ++i) sys.b.push_back(g.element(spec));
        const auto direct = solve_direct(sys);
        const auto viaqpf = solve_qpf(sys);
        Rows rows;
        rows.push_back(row("qpf_matches_direct", size, 0, 0, all_equal(direct, viaqpf)));
        rows.push_back(row("quasidet_matches_direct", size, 0, 0, all_equal(direct, solve_quasidet(sys))));
        rows.push_back(row("residual", size, 0, 0, all_zero_elems(solve_residual(sys, viaqpf))));
        return rows;
      });
      run.instance(name, k++, [size](std::uint64_t s) {
        InstanceGenerator g(s);
        const RingSpec q{RingKind::Rational, 1};
        SkewSystem sys{g.skew_matrix(q, size), {}};
        for (int i = 0; i < size; ++i) sys.b.push_back(g.element(q));
        return Rows{row("jacobi_rule", size, 0, 0, all_equal(solve_direct(sys), solve_jacobi(sys)))};
      });
    }
  }
}

using SuiteFn = void (*)(Runner&);

const std::vector<std::pair<std::string, SuiteFn>>& table() {
  static const std::vector<std::pair<std::string, SuiteFn>> t = {
      {"classical", classical}, {"ratio", ratio}, {"condensation", condensation}, {"symmetry", symmetry},
      {"derivatives", derivatives}, {"btoda", btoda}, {"sop", sop}, {"solver", solver}};
  return t;
}

}  // namespace

bool Report::passed() const {
  if (exhausted > 0 || rows.empty()) return false;
  return std::all_of(rows.begin(), rows.end(), [](const Row& r) { return r.zero; });
}

void Report::sort() {
  std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return std::tie(a.suite, a.theorem, a.n, a.i, a.j, a.seed) < std::tie(b.suite, b.theorem, b.n, b.i, b.j, b.seed);
  });
}

const std::vector<std::string>& names() {
  static const std::vector<std::string> n = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : table()) v.push_back(name);
    return v;
  }();
  return n;
}

int default_nodes(int n_max) { return 2 * n_max + 4; }

std::uint64_t instance_seed(std::uint64_t base, std::string_view suite, int k, int attempt) {
  std::uint64_t h = splitmix(base ^ fnv1a(suite));
  h = splitmix(h + static_cast<std::uint64_t>(k));
  return splitmix(h + (static_cast<std::uint64_t>(attempt) << 32));
}

Report run(std::string_view name, const Config& cfg) {
  if (cfg.n_max < 1) throw Error(ErrorCode::BadInput, "n must be at least 1");
  if (cfg.instances < 1) throw Error(ErrorCode::BadInput, "instance count must be positive");
  if (cfg.nodes < 0) throw Error(ErrorCode::BadInput, "node count must be non-negative");
  Report rep;
  Runner runner(cfg, rep);
  bool found = false;
  for (const auto& [n, fn] : table()) {
    if (name == "all" || name == n) {
      fn(runner);
      found = true;
    }
  }
  if (!found) throw Error(ErrorCode::BadInput, "unknown suite \"" + std::string(name) + "\"");
  rep.sort();
  return rep;
}

nlohmann::json to_json(const Report& r, const Config& cfg, std::string_view suite) {
  using nlohmann::json;
  json c;
  json_io::put_ring_spec(c, cfg.spec);
  c["n"] = cfg.n_max;
  c["nodes"] = cfg.nodes > 0 ? cfg.nodes : default_nodes(cfg.n_max);
  c["seed"] = cfg.seed;
  c["instances"] = cfg.instances;
  c["suite"] = std::string(suite);

  json results = json::array();
  for (const auto& row : r.rows) {
    results.push_back({{"suite", row.suite}, {"theorem", row.theorem}, {"seed", row.seed}, {"n", row.n},
                       {"i", row.i}, {"j", row.j}, {"residual_is_zero", row.zero}});
  }
  json out;
  out["config"] = std::move(c);
  out["results"] = std::move(results);
  out["checked"] = r.rows.size();
  out["failed"] = std::count_if(r.rows.begin(), r.rows.end(), [](const Row& x) { return !x.zero; });
  out["reseeds"] = r.reseeds;
  out["exhausted"] = r.exhausted;
  out["diagonal_witnesses"] = r.diagonal_witnesses;
  out["passed"] = r.passed();
  return out;
}

std::string to_text(const Report& r) {
  std::string s;
  for (const auto& row : r.rows) {
    s += row.suite + " " + row.theorem + " n=" + std::to_string(row.n) + " i=" + std::to_string(row.i) +
         " j=" + std::to_string(row.j) + " seed=" + std::to_string(row.seed) + (row.zero ? " zero\n" : " NONZERO\n");
  }
  const auto failed = std::count_if(r.rows.begin(), r.rows.end(), [](const Row& x) { return !x.zero; });
  s += "checked " + std::to_string(r.rows.size()) + ", failed " + std::to_string(failed) + ", reseeds " +
       std::to_string(r.reseeds) + ", exhausted " + std::to_string(r.exhausted) + "\n";
  s += r.passed() ? "PASS\n" : "FAIL\n";
  return s;
}

}  // namespace qpf::suites
