// Acceptance gate: one line per criterion, exit 0 only if all pass.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "hopf/gns.hpp"
#include "hopf/io.hpp"

using namespace hopf;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<GroupTable> corpus() {
  return {GroupTable::cyclic(2), GroupTable::cyclic(3), GroupTable::cyclic(4),
          GroupTable::direct_product(GroupTable::cyclic(2),
                                     GroupTable::cyclic(2)),
          GroupTable::symmetric(3)};
}

struct Line {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& why) {
    if (!ok && pass) {
      pass = false;
      detail = why;
    }
  }
};

void print(int n, const std::string& title, const Line& l) {
  std::printf("criterion %d [%s] %s%s%s\n", n, l.pass ? "PASS" : "FAIL",
              title.c_str(), l.detail.empty() ? "" : " — ",
              l.detail.c_str());
}

double max_spec_diff(const HopfSpec& a, const HopfSpec& b) {
  double r = 0.0;
  r = std::max(r, max_abs_diff(a.mult, b.mult));
  r = std::max(r, max_abs_diff(a.unit, b.unit));
  r = std::max(r, max_abs_diff(a.comult, b.comult));
  r = std::max(r, max_abs_diff(a.counit, b.counit));
  r = std::max(r, max_abs_diff(a.antipode, b.antipode));
  r = std::max(r, max_abs_diff(a.star, b.star));
  if (a.integral && b.integral)
    r = std::max(r, max_abs_diff(*a.integral, *b.integral));
  return r;
}

// criterion 2 body, shared with the dual-pairing half of criterion 3
void check_pairing_suite(const PairingSpec& pr, const Tolerance& tol,
                         Line& l, const std::string& who) {
  AxiomReport rep;
  rep.append(verify_pairing(pr, tol));
  rep.append(verify_actions(pr, tol));
  rep.append(verify_galois(pr, tol));
  l.require(rep.overall() && rep.max_residual() <= 1e-9,
            who + " residual " + std::to_string(rep.max_residual()));
  NondegeneracyResult nd = nondegeneracy(pr, tol);
  l.require(nd.nondegenerate && std::abs(nd.min_singular - 1.0) <= 1e-12,
            who + " min singular " + std::to_string(nd.min_singular));
}

int run_cli(const std::string& args, const fs::path& stdout_file) {
  std::string cmd = std::string(HOPFCTL_PATH) + " " + args + " >" +
                    stdout_file.string() + " 2>/dev/null";
  int rc = std::system(cmd.c_str());
  return (rc != -1 && WIFEXITED(rc)) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return "<unreadable>";
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

int main() {
  Tolerance tol(1e-9, 1e-8);
  int failures = 0;
  auto finish = [&](int n, const std::string& title, const Line& l) {
    print(n, title, l);
    if (!l.pass) ++failures;
  };

  // 1. instance axiom suite on the corpus, residual <= 1e-9, <= 5 s
  {
    Line l;
    auto t0 = Clock::now();
    double worst = 0.0;
    for (const GroupTable& g : corpus())
      for (const HopfSpec& h : {group_algebra(g), function_algebra(g)}) {
        AxiomReport rep = verify_hopf_star(h, tol);
        rep.append(verify_cstar(h, tol));
        worst = std::max(worst, rep.max_residual());
        l.require(rep.overall(), h.label + " has a failing check");
      }
    double dt = seconds_since(t0);
    l.require(worst <= 1e-9, "max residual " + std::to_string(worst));
    l.require(dt <= 5.0, "took " + std::to_string(dt) + " s");
    char buf[128];
    std::snprintf(buf, sizeof(buf), " (max residual %.2e, %.2f s)", worst, dt);
    if (l.pass) l.detail = buf + 1;
    finish(1, "instance axiom suite on the five-group corpus", l);
  }

  // 2. pairing suite: all entries pass, residual <= 1e-9, min singular 1
  {
    Line l;
    for (const GroupTable& g : corpus())
      check_pairing_suite(canonical_pairing(g), tol, l, g.label());
    finish(2, "canonical pairing, action, and Galois suite", l);
  }

  // 3. dual construction matches the function algebra within 1e-12
  {
    Line l;
    for (const GroupTable& g : corpus()) {
      double diff = max_spec_diff(dualize(group_algebra(g)),
                                  function_algebra(g));
      l.require(diff <= 1e-12,
                g.label() + " deviation " + std::to_string(diff));
      check_pairing_suite(dual_pairing(group_algebra(g)), tol, l,
                          "dual pairing of " + g.label());
    }
    finish(3, "dual of the group algebra is the function algebra", l);
  }

  // 4. double matches the classical group-double oracle to 1e-12
  {
    Line l;
    for (const GroupTable& g :
         {GroupTable::cyclic(2), GroupTable::cyclic(4),
          GroupTable::symmetric(3)}) {
      DoubleSpec d = build_double(flip(canonical_pairing(g)), tol);
      double dev = compare_with_oracle(d, g, tol);
      l.require(dev <= 1e-12, g.label() + " deviation " + std::to_string(dev));
    }
    finish(4, "double agrees with the classical group double", l);
  }

  // 5. full S3 double suite at dim 36, residual <= 1e-8, <= 60 s
  GNSData s3_gns;  // reused by criterion 6
  DoubleSpec s3_double;
  {
    Line l;
    auto t0 = Clock::now();
    s3_double = build_double(canonical_pairing(GroupTable::symmetric(3)), tol);
    AxiomReport rep = verify_double(s3_double, tol);
    rep.append(verify_theta(s3_double, tol));
    s3_gns = gns_build(s3_double.H, tol);
    double dt = seconds_since(t0);
    l.require(s3_double.H.dim == 36, "unexpected dimension");
    l.require(rep.overall() && rep.max_residual() <= 1e-8,
              "max residual " + std::to_string(rep.max_residual()));
    l.require(s3_gns.gram_min_eig > 0.0, "Gram not positive");
    l.require(dt <= 60.0, "took " + std::to_string(dt) + " s");
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  " (max residual %.2e, Gram min eig %.2e, %.1f s)",
                  rep.max_residual(), s3_gns.gram_min_eig, dt);
    if (l.pass) l.detail = buf + 1;
    finish(5, "S3 double Hopf C* suite (dim 36)", l);
  }

  // 6. GNS: C*-identity at rel 1e-7, embedding isometries at rel 1e-8,
  //    spot norm 1/sqrt(2) on the Z/2 double
  {
    Line l;
    l.require(
        verify_cstar_identity(s3_gns, 100, 1, Tolerance(1e-9, 1e-7)).overall(),
        "C*-identity failed on the S3 double");
    {
      GNSData ga = gns_build(s3_double.source.A, tol);
      GNSData gb = gns_build(s3_double.source.B, tol);
      l.require(verify_isometry(s3_double, ga, gb, s3_gns,
                                Tolerance(1e-9, 1e-8), 100, 1)
                    .overall(),
                "isometry failed on the S3 double");
    }
    DoubleSpec d2 = build_double(canonical_pairing(GroupTable::cyclic(2)), tol);
    GNSData g2 = gns_build(d2.H, tol);
    l.require(
        verify_cstar_identity(g2, 100, 1, Tolerance(1e-9, 1e-7)).overall(),
        "C*-identity failed on the Z/2 double");
    {
      GNSData ga = gns_build(d2.source.A, tol);
      GNSData gb = gns_build(d2.source.B, tol);
      l.require(verify_isometry(d2, ga, gb, g2, Tolerance(1e-9, 1e-8), 100, 1)
                    .overall(),
                "isometry failed on the Z/2 double");
    }
    CTensor spot =
        d2.elementary(d2.source.A.basis(1), d2.source.B.basis(0));
    double norm = vector_norm(g2, spot);
    l.require(std::abs(norm - 1.0 / std::sqrt(2.0)) <= 1e-10,
              "spot norm " + std::to_string(norm));
    char buf[96];
    std::snprintf(buf, sizeof(buf), " (spot norm %.12f)", norm);
    if (l.pass) l.detail = buf + 1;
    finish(6, "GNS C*-identity, embedding isometries, and spot norm", l);
  }

  // 7. mutation sensitivity: 1e-3 single-entry perturbations trip the
  //    matching report entry
  {
    Line l;
    HopfSpec base = group_algebra(GroupTable::symmetric(3));
    auto entry_fails = [&](const HopfSpec& h, const std::string& name,
                           bool cstar) {
      AxiomReport rep =
          cstar ? verify_cstar(h, tol) : verify_hopf_star(h, tol);
      const AxiomCheck* c = rep.find(name);
      return c != nullptr && !c->pass;
    };

    HopfSpec m = base;
    m.mult.at({1, 2, 0}) += 1e-3;
    l.require(entry_fails(m, "associativity", false),
              "mult perturbation missed by associativity");

    m = base;
    m.comult.at({1, 2, 3}) += 1e-3;
    l.require(entry_fails(m, "coassociativity", false),
              "comult perturbation missed by coassociativity");

    m = base;
    m.unit[1] += 1e-3;
    l.require(entry_fails(m, "unit", false),
              "unit perturbation missed by the unit law");

    m = base;
    m.counit[1] += 1e-3;
    l.require(entry_fails(m, "counit", false),
              "counit perturbation missed by the counit law");

    m = base;
    m.antipode.at({1, 1}) += 1e-3;
    l.require(entry_fails(m, "antipode", false),
              "antipode perturbation missed by the antipode law");

    m = base;
    m.star.at({1, 1}) += 1e-3;
    l.require(entry_fails(m, "star-involution", false),
              "star perturbation missed by the involution law");

    m = base;
    (*m.integral)[1] += 1e-3;
    l.require(entry_fails(m, "integral-invariance", true),
              "integral perturbation missed by invariance");
    finish(7, "single-entry 1e-3 mutations trip their verifier entries", l);
  }

  // 8. determinism: two identical CLI pipelines give byte-identical reports
  {
    Line l;
    fs::path dir = fs::path(TEST_TMPDIR) / "acceptance_cli";
    fs::create_directories(dir);
    fs::path group = dir / "group.json";
    io::write_json_file(group, io::group_to_json(GroupTable::symmetric(3)));

    auto pipeline = [&](const std::string& tag) -> std::string {
      fs::path spec = dir / ("spec_" + tag + ".json");
      fs::path pairing = dir / ("pairing_" + tag + ".json");
      fs::path dbl = dir / ("double_" + tag + ".json");
      fs::path out = dir / ("stdout_" + tag + ".txt");
      std::string all;
      if (run_cli("make " + group.string() + " group-algebra " +
                      spec.string(), out) != 0)
        return "make failed: " + slurp(out);
      if (run_cli("verify " + spec.string() + " --json", out) != 0)
        return "verify failed";
      all += slurp(out);
      if (run_cli("make " + group.string() + " canonical-pairing " +
                      pairing.string(), out) != 0)
        return "make pairing failed";
      if (run_cli("double " + pairing.string() + " " + dbl.string() +
                      " --json", out) != 0)
        return "double failed";
      all += slurp(out);
      if (run_cli("gns " + spec.string() + " --samples 50 --seed 7 --json",
                  out) != 0)
        return "gns failed";
      all += slurp(out) + slurp(dbl);
      return all;
    };
    std::string first = pipeline("a");
    std::string second = pipeline("b");
    l.require(!first.empty() && first.find("failed") == std::string::npos,
              first.substr(0, 120));
    l.require(first == second, "pipeline outputs differ between runs");
    finish(8, "CLI pipeline is byte-identical across runs", l);
  }

  if (failures == 0) std::printf("all 8 acceptance criteria passed\n");
  return failures == 0 ? 0 : 1;
}
