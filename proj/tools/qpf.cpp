// qpf: command-line front end over the C API.

#include <cerrno>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "quasipf/quasipf.h"

namespace {

struct Options {
  std::string ring = "block";
  int block_dim = 2;
  int n = 2;
  int nodes = 0;
  std::uint64_t seed = 7;
  int instances = 3;
  std::string suite = "all";
  std::string report = "json";
  std::string input;
  std::string method = "both";
};

// Exit codes: 0 success, 1 a residual or agreement check failed,
// 2 bad input, 3 singular instance, 4 anything else.
int exit_code(qpf_status s) {
  switch (s) {
    case QPF_OK: return 0;
    case QPF_VERIFY_FAILED: return 1;
    case QPF_BAD_INPUT:
    case QPF_TAG_MISMATCH:
    case QPF_DIM_MISMATCH:
    case QPF_TOO_LARGE: return 2;
    case QPF_SINGULAR: return 3;
    default: return 4;
  }
}

int fail(qpf_status s) {
  std::cerr << "qpf: " << qpf_status_string(s) << ": " << qpf_last_error() << "\n";
  return exit_code(s);
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

// Prints the result and maps the status to an exit code.
int finish(qpf_status s, qpf_result* r, const Options& o) {
  if (r) {
    std::cout << (o.report == "text" ? qpf_result_text(r) : qpf_result_json(r));
    qpf_result_free(r);
  }
  if (s == QPF_OK) return 0;
  return fail(s);
}

qpf_config make_config(const Options& o) {
  qpf_config c;
  qpf_config_init(&c);
  c.ring = o.ring.c_str();
  c.block_dim = o.block_dim;
  c.n = o.n;
  c.nodes = o.nodes;
  c.seed = o.seed;
  c.instances = o.instances;
  return c;
}

int load_input(const Options& o, std::string& text) {
  if (o.input.empty()) {
    std::cerr << "qpf: --input is required\n";
    return 2;
  }
  if (!read_file(o.input, text)) {
    std::cerr << "qpf: cannot read " << o.input << "\n";
    return 2;
  }
  return 0;
}

int run_solve(const Options& o) {
  std::string text;
  if (int rc = load_input(o, text)) return rc;
  qpf_system* sys = nullptr;
  qpf_status s = qpf_system_load(text.c_str(), &sys);
  if (s != QPF_OK) return fail(s);
  qpf_result* r = nullptr;
  s = qpf_system_solve(sys, o.method.c_str(), &r);
  qpf_system_free(sys);
  return finish(s, r, o);
}

int run_pfaffian(const Options& o) {
  std::string text;
  if (int rc = load_input(o, text)) return rc;
  qpf_result* r = nullptr;
  const qpf_status s = qpf_pfaffian(text.c_str(), &r);
  return finish(s, r, o);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact quasi-Pfaffian toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_option("--ring", o.ring, "rational | quaternion | block")
      ->check(CLI::IsMember({"rational", "quaternion", "block"}));
  app.add_option("--block-dim", o.block_dim, "block size for the block ring")->check(CLI::Range(1, 16));
  app.add_option("--n", o.n, "largest level")->check(CLI::Range(1, 16));
  app.add_option("--nodes", o.nodes, "measure nodes (0: 2n + 4)")->check(CLI::Range(0, 64));
  app.add_option("--seed", o.seed, "base seed; QPF_SEED overrides");
  app.add_option("--instances", o.instances, "instances per size and level")->check(CLI::Range(1, 1000));
  app.add_option("--report", o.report, "json | text")->check(CLI::IsMember({"json", "text"}));

  auto* solve = app.add_subcommand("solve", "solve a skew linear system");
  solve->add_option("--input", o.input, "system JSON");
  solve->add_option("--method", o.method, "direct | qpf | both")
      ->check(CLI::IsMember({"direct", "qpf", "both"}));
  auto* pfaffian = app.add_subcommand("pfaffian", "Pfaffian of a matrix or a quasi-Pfaffian request");
  pfaffian->add_option("--input", o.input, "matrix or quasi-Pfaffian JSON");
  auto* verify = app.add_subcommand("verify", "run seeded verification suites");
  verify->add_option("--suite", o.suite, "suite name or all");
  auto* btoda = app.add_subcommand("btoda", "B-Toda state table and checks");
  auto* sop = app.add_subcommand("sop", "skew-orthogonal polynomial table and checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (const char* env = std::getenv("QPF_SEED"); env && *env) {
    char* end = nullptr;
    errno = 0;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (errno != 0 || *end != '\0') {
      std::cerr << "qpf: QPF_SEED must be an unsigned integer\n";
      return 2;
    }
    o.seed = v;
  }

  if (solve->parsed()) return run_solve(o);
  if (pfaffian->parsed()) return run_pfaffian(o);

  const qpf_config cfg = make_config(o);
  qpf_result* r = nullptr;
  qpf_status s = QPF_INTERNAL;
  if (verify->parsed()) {
    s = qpf_verify(&cfg, o.suite.c_str(), &r);
  } else if (btoda->parsed()) {
    s = qpf_btoda(&cfg, &r);
  } else if (sop->parsed()) {
    s = qpf_sop(&cfg, &r);
  }
  return finish(s, r, o);
}
