// One pass/fail line per acceptance criterion. Exit status is the number of
// failing criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "tortile/bundle_io.hpp"
#include "tortile/catalog.hpp"
#include "tortile/mutation.hpp"
#include "tortile/report.hpp"
#include "tortile/sx.hpp"
#include "word_gen.hpp"

using namespace tortile;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

int failures = 0;

void criterion(int id, const char* what, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (o.pass && secs > limit_s) o.fail("too slow");
  if (!o.pass) ++failures;
  std::printf("criterion %d: %s  %s  [%.2f s, limit %.0f s]%s%s\n", id, o.pass ? "PASS" : "FAIL", what, secs, limit_s,
              o.detail.empty() ? "" : "  ", o.detail.c_str());
  std::fflush(stdout);
}

std::vector<SuiteRow> all_rows() {
  std::vector<SuiteRow> rows;
  for (SuiteKind k : {SuiteKind::Balanced, SuiteKind::Tortile, SuiteKind::GAction, SuiteKind::Forms})
    for (auto& r : suite_rows(k)) rows.push_back(std::move(r));
  return rows;
}

PointedSpec z2(bool sign) {
  PointedSpec s;
  s.A = GroupTable::cyclic(2);
  if (sign) s.omega[{1, 1, 1}] = Cyclotomic(-1);
  return s;
}

std::string row_id(const SuiteReport& r) {
  const RowResult* f = r.first_failure();
  return f ? r.suite + "/" + f->id + ": " + f->witness : "";
}

StructureBundle without_duality(StructureBundle b) {
  b.duality.reset();
  return b;
}

}  // namespace

int main() {
  criterion(1, "row manifest counts", 1, [] {
    Outcome o;
    const auto counts = manifest_counts(all_rows());
    const std::map<std::string, int> want = {{"A.3", 4}, {"A.4", 4}, {"A.6", 4}, {"A.7", 7}, {"A.8", 3}};
    for (const auto& [k, v] : want) {
      const int got = counts.count(k) ? counts.at(k) : 0;
      if (got != v) o.fail(k + " has " + std::to_string(got) + " rows, want " + std::to_string(v));
    }
    return o;
  });

  criterion(2, "pointed enumeration matches the reference", 10, [] {
    Outcome o;
    const Cyclotomic i = Cyclotomic::root_of_unity(1, 4);
    struct Case {
      PointedSpec spec;
      std::set<std::string> R11;
    };
    const std::vector<Case> cases = {{z2(false), {"1", "-1"}},
                                     {z2(true), {i.to_string(), (-i).to_string()}}};
    for (const auto& c : cases) {
      const auto r = enumerate_pointed(c.spec);
      const std::set<std::vector<int>> got(r.exponents.begin(), r.exponents.end());
      if (got != testing::naive_braidings(c.spec)) o.fail("enumeration differs from the reference loop");
      std::set<std::string> R11;
      for (const auto& b : r.bundles) R11.insert(b.braiding->R.at({1, 1, 0})(0, 0).to_string());
      if (r.bundles.size() != 2 || R11 != c.R11) o.fail("wrong braiding values on Z/2");
    }
    PointedSpec one;
    one.A = GroupTable::cyclic(1);
    if (enumerate_pointed(one).bundles.size() != 1) o.fail("Z/1 should have exactly one structure");
    return o;
  });

  criterion(3, "package, relations, derive and round trip for every builtin", 30, [] {
    Outcome o;
    for (const auto& nb : builtin_examples()) {
      const SXAssignment a = package_assignment(nb.bundle, true);
      if (auto f = row_id(check_relations(a)); !f.empty()) o.fail(nb.name + ": " + f);
      const StructureBundle back = derive_balanced(a);
      if (auto f = row_id(check_balanced_pi(back)); !f.empty()) o.fail(nb.name + ": " + f);
      if (serialize_bundle(back) != serialize_bundle(without_duality(nb.bundle))) o.fail(nb.name + ": round trip differs");
      if (auto f = row_id(check_forms(back)); !f.empty()) o.fail(nb.name + ": " + f);
    }
    return o;
  });

  criterion(4, "derived duality is tortile on self-dual builtins", 60, [] {
    Outcome o;
    int derived = 0;
    bool g_checked = false;
    for (const auto& nb : builtin_examples()) {
      if (!nb.self_dual) continue;
      const SXAssignment a = package_assignment(nb.bundle, true);
      const StructureBundle d = derive_duality(a, standard_witness(a));
      ++derived;
      if (auto f = row_id(check_tortile(d)); !f.empty()) o.fail(nb.name + ": " + f);
      if (d.g_action && d.g_action->G.order() == 2) {
        g_checked = true;
        if (auto f = row_id(check_G_action(d)); !f.empty()) o.fail(nb.name + ": " + f);
      }
    }
    if (derived < 7) o.fail("expected at least 7 self-dual builtins");
    if (!g_checked) o.fail("no builtin with G = Z/2 was derived");
    return o;
  });

  criterion(5, "every zeta8 scalar mutation is caught", 300, [] {
    Outcome o;
    const Cyclotomic z8 = Cyclotomic::root_of_unity(1, 8);
    std::size_t slots = 0;
    for (const auto& nb : builtin_examples()) {
      const auto scan = mutation_scan(nb.bundle, nb.suites, z8);
      slots += scan.slots;
      for (const auto& m : scan.outcomes)
        if (m.caught_by.empty()) o.fail(nb.name + ": silent pass at " + m.section + "[" + m.key + "]");
    }
    if (o.pass) o.detail = std::to_string(slots) + " mutations";
    return o;
  });

  criterion(6, "forms: double dual, hom versus pairing, Frobenius", 10, [] {
    Outcome o;
    for (const auto& nb : builtin_examples()) {
      const auto rep = check_forms(nb.bundle);
      for (const char* id : {"B.involution", "B.hom-pairing", "F.frobenius"}) {
        bool seen = false;
        for (const auto& r : rep.rows)
          if (r.id == id) {
            seen = true;
            if (!r.pass || r.checked == 0) o.fail(nb.name + ": " + id + " " + r.witness);
          }
        if (!seen) o.fail(std::string("row ") + id + " missing");
      }
    }
    return o;
  });

  criterion(7, "random words: reflect/rotate laws and signatures", 10, [] {
    Outcome o;
    const GroupTable pi = GroupTable::symmetric3();
    const GroupTable G = GroupTable::cyclic(2);
    testing::WordGen gen(pi, &G, 7);
    int good = 0;
    for (int k = 0; k < 1000; ++k) {
      const auto w1 = gen.word();
      const auto w2 = gen.word(w1.target);
      const auto w3 = gen.word();
      const auto comp = compose_words(w1, w2, pi);
      const auto tens = tensor_words(w1, w3, pi);
      auto refl = [&](const CobordismWord& w) { return reflect_word(w, pi, &G); };
      auto rot = [&](const CobordismWord& w) { return rotate_word(w, pi); };
      bool ok = true;
      ok = ok && refl(comp) == compose_words(refl(w2), refl(w1), pi);
      ok = ok && rot(comp) == compose_words(rot(w2), rot(w1), pi);
      ok = ok && refl(refl(w1)) == w1;
      ok = ok && rot(tens) == tensor_words(rot(w3), rot(w1), pi);
      ok = ok && refl(w1).source == w1.target && refl(w1).target == w1.source;
      ok = ok && rot(w1).source == rotate_signature(w1.target, pi) && rot(w1).target == rotate_signature(w1.source, pi);
      try {
        validate_word(refl(w1), pi);
        validate_word(rot(w1), pi);
        validate_word(tens, pi);
      } catch (const SurfaceError&) {
        ok = false;
      }
      if (ok) ++good;
      else o.fail("law fails on word " + word_to_sexp(w1, pi, &G));
    }
    o.detail = std::to_string(good) + " words";
    if (good < 1000) o.pass = false;
    return o;
  });

  criterion(8, "reports and enumeration identical for 1, 2 and 8 workers", 60, [] {
    Outcome o;
    std::vector<StructureBundle> bundles;
    std::vector<std::vector<SuiteKind>> suites;
    for (const auto& nb : builtin_examples()) {
      bundles.push_back(nb.bundle);
      suites.push_back(nb.suites);
    }
    StructureBundle broken = find_builtin("s3-crossed")->bundle;
    broken.F.begin()->second(0, 0) = Cyclotomic(-1);
    bundles.push_back(broken);
    suites.push_back({SuiteKind::Balanced, SuiteKind::Tortile});
    auto render = [&](int workers) {
      std::string out;
      for (std::size_t k = 0; k < bundles.size(); ++k)
        for (SuiteKind s : suites[k]) out += reports_to_json({run_suite(bundles[k], s, workers)});
      for (bool sign : {false, true})
        for (const auto& b : enumerate_pointed(z2(sign), workers).bundles) out += serialize_bundle(b);
      return out;
    };
    const std::string one = render(1);
    for (int w : {2, 8})
      if (render(w) != one) o.fail("output differs with " + std::to_string(w) + " workers");
    return o;
  });

  return failures;
}
