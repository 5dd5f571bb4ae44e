// Acceptance suite: one PASS/FAIL line per criterion, exit 1 if any fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "hvec/construct.hpp"
#include "hvec/invsys.hpp"
#include "oracles.hpp"

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

struct Invocation {
  int code = 0;
  std::string out;
  std::string err;
  double seconds = 0;
};

Invocation invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const auto start = Clock::now();
  Invocation r;
  r.code = hvec::cli::run_command_line(args, out, err);
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  r.out = out.str();
  r.err = err.str();
  return r;
}

json vec(std::initializer_list<long> v) { return json(std::vector<long>(v)); }

// Result of one criterion: pass flag plus a short note for the log line.
struct Outcome {
  bool pass = true;
  std::string note;
  void fail(const std::string& why) {
    if (pass) note = why;
    pass = false;
  }
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> body;
};

std::string fmt_seconds(double s) {
  std::ostringstream o;
  o.setf(std::ios::fixed);
  o.precision(2);
  o << s << "s";
  return o.str();
}

Outcome construct_thm_e_six() {
  Outcome o;
  const auto r = invoke({"construct", "thm-e", "--e", "6", "--format", "json"});
  if (r.code != 0) {
    o.fail("exit " + std::to_string(r.code));
    return o;
  }
  const auto res = json::parse(r.out)["results"][0];
  if (res["gorenstein"] != vec({1, 10, 14, 20, 14, 10, 1})) o.fail("gorenstein differs");
  if (res["level"] != vec({1, 3, 6, 10, 8, 7})) o.fail("level differs");
  if (r.seconds >= 1.0) o.fail("took " + fmt_seconds(r.seconds));
  return o;
}

Outcome construct_thm_r_ten_even() {
  Outcome o;
  const auto r = invoke({"construct", "thm-r", "--d", "10", "--parity", "even",
                         "--format", "json"});
  if (r.code != 0) {
    o.fail("exit " + std::to_string(r.code));
    return o;
  }
  const auto res = json::parse(r.out)["results"];
  if (res.size() != 1) o.fail("expected one result");
  if (res[0]["level"] != vec({1, 3, 6, 10, 15, 21, 28, 36, 45, 55, 66, 67, 68, 56,
                              42, 30, 20, 12, 6, 2}))
    o.fail("level differs");
  if (res[0]["gorenstein"] != vec({1, 5, 12, 22, 35, 51, 70, 92, 113, 122, 132,
                                   122, 113, 92, 70, 51, 35, 22, 12, 5, 1}))
    o.fail("gorenstein differs");
  if (r.seconds >= 1.0) o.fail("took " + fmt_seconds(r.seconds));
  return o;
}

// Every report matches and its best vector equals the target entrywise.
void expect_all_match(const Invocation& r, std::size_t reports, Outcome& o) {
  if (r.code != 0) {
    o.fail("exit " + std::to_string(r.code) + " " + r.err);
    return;
  }
  const auto doc = json::parse(r.out);
  if (doc["reports"].size() != reports) o.fail("wrong report count");
  for (const auto& rep : doc["reports"]) {
    const std::string tag =
        rep["kind"].get<std::string>() + " " + std::to_string(rep["parameter"].get<long>()) +
        " " + rep["field"].get<std::string>();
    if (rep["verdict"] != "match") o.fail(tag + ": " + rep["verdict"].get<std::string>());
    if (rep["best"] != rep["target"]) o.fail(tag + ": best != target");
  }
}

Outcome verify_thm_e_range() {
  Outcome o;
  double worst = 0;
  for (long e = 6; e <= 10; ++e) {
    const auto r = invoke({"verify", "thm-e", "--e", std::to_string(e), "--field",
                           "32003", "--trials", "5", "--format", "json"});
    expect_all_match(r, 1, o);
    worst = std::max(worst, r.seconds);
    if (r.seconds >= 10.0) o.fail("e=" + std::to_string(e) + " took " + fmt_seconds(r.seconds));
  }
  if (o.pass) o.note = "slowest e " + fmt_seconds(worst);
  return o;
}

Outcome verify_thm_r_ten() {
  Outcome o;
  double worst = 0;
  for (const char* parity : {"odd", "even"}) {
    const auto r = invoke({"verify", "thm-r", "--d", "10", "--parity", parity,
                           "--field", "32003", "--trials", "5", "--format", "json"});
    expect_all_match(r, 1, o);
    worst = std::max(worst, r.seconds);
    if (r.seconds >= 60.0) o.fail(std::string(parity) + " took " + fmt_seconds(r.seconds));
  }
  if (o.pass) o.note = "slowest parity " + fmt_seconds(worst);
  return o;
}

Outcome classification_suite() {
  using namespace hvec;
  Outcome o;
  auto common = [&](const FamilyResult& f, const std::string& tag) {
    const HVector& g = f.gorenstein_hvector;
    if (!is_symmetric(g)) o.fail(tag + " not symmetric");
    if (!is_unimodal(g)) o.fail(tag + " not unimodal");
    if (is_si_sequence(g)) o.fail(tag + " is SI");
  };
  for (long e = 6; e <= 14; ++e) {
    const FamilyResult f = *construct_thm_e(e).result;
    const std::string tag = "thm-e e=" + std::to_string(e);
    common(f, tag);
    const auto v = first_difference_violation(first_half(f.gorenstein_hvector));
    if (!v || !v->growth || v->growth->degree != 2 || v->growth->value != 4 ||
        v->growth->next != 6)
      o.fail(tag + " violation not at 2->3 with 4->6");
  }
  for (long d = 10; d <= 16; ++d) {
    for (Parity p : {Parity::Odd, Parity::Even}) {
      const FamilyResult f = construct_thm_r_gorenstein(d, p);
      const std::string tag = "thm-r d=" + std::to_string(d) + " " + std::string(to_string(p));
      common(f, tag);
      const auto diff = first_difference(f.gorenstein_hvector.entries());
      if (diff[static_cast<std::size_t>(d - 1)] != d - 1 ||
          diff[static_cast<std::size_t>(d)] != d)
        o.fail(tag + " difference not (d-1, d)");
    }
  }
  return o;
}

Outcome macaulay_oracle() {
  Outcome o;
  for (long n = 1; n <= 100; ++n) {
    for (int i = 1; i <= 5; ++i) {
      if (hvec::macaulay_bound(n, i) != hvec::oracle::lex_growth(n, i))
        o.fail("n=" + std::to_string(n) + " i=" + std::to_string(i));
    }
  }
  return o;
}

// Extends h (positions 0..k-1) through the first half; the rest is mirrored.
void enumerate_symmetric(std::vector<hvec::Integer>& h, std::size_t e,
                         long& seen, Outcome& o) {
  using namespace hvec;
  const std::size_t k = h.size();
  if (k == e / 2 + 1) {
    std::vector<Integer> full(e + 1);
    for (std::size_t i = 0; i <= e; ++i) full[i] = h[std::min(i, e - i)];
    const HVector v(full);
    if (!is_o_sequence(v) || !is_unimodal(v)) return;
    ++seen;
    if (!is_si_sequence(v)) o.fail("non-SI " + v.to_string());
    return;
  }
  const Integer cap = k == 1 ? Integer(6) : macaulay_bound(h.back(), static_cast<long>(k - 1));
  for (Integer x = 1; x <= cap; ++x) {
    h.push_back(x);
    enumerate_symmetric(h, e, seen, o);
    h.pop_back();
  }
}

Outcome small_socle_enumeration() {
  Outcome o;
  long seen = 0;
  for (std::size_t e = 3; e <= 5; ++e) {
    std::vector<hvec::Integer> h{1};
    enumerate_symmetric(h, e, seen, o);
  }
  if (seen == 0) o.fail("nothing enumerated");
  if (o.pass) o.note = std::to_string(seen) + " vectors";
  return o;
}

Outcome single_form_symmetry() {
  using namespace hvec;
  Outcome o;
  const FieldSpec field(32003);
  ScalarSampler sampler(field, 2024);
  Rng shape(2025);
  for (int t = 0; t < 50; ++t) {
    const std::size_t r = 1 + shape.below(4);
    const long e = 1 + static_cast<long>(shape.below(8));
    const HVector h = hilbert_function({random_form(field, r, e, sampler)});
    const std::string tag = "r=" + std::to_string(r) + " e=" + std::to_string(e);
    if (!is_symmetric(h)) o.fail(tag + " not symmetric");
    if (h != compress_level({}, static_cast<long>(r), e)) o.fail(tag + " not compressed");
  }
  return o;
}

Outcome characteristic_sweep() {
  Outcome o;
  const auto r = invoke({"sweep", "thm-e", "--e", "6", "--chars", "0,101,1009,32003",
                         "--format", "json"});
  expect_all_match(r, 4, o);
  if (r.seconds >= 60.0) o.fail("took " + fmt_seconds(r.seconds));
  if (o.pass) o.note = fmt_seconds(r.seconds);
  return o;
}

Outcome determinism() {
  Outcome o;
  const std::vector<std::vector<std::string>> commands{
      {"verify", "thm-e", "--e", "6..7", "--seed", "17", "--format", "json"},
      {"verify", "thm-e", "--e", "6", "--trials", "3", "--parallel", "--format", "json"},
      {"verify", "thm-r", "--d", "10", "--parity", "even", "--trials", "1", "--format", "json"},
      {"sweep", "thm-e", "--e", "6", "--chars", "0,1009", "--trials", "2", "--format", "json"},
  };
  for (const auto& args : commands) {
    const auto a = invoke(args);
    const auto b = invoke(args);
    if (a.code != 0 || a.out.empty()) o.fail(args[0] + " failed");
    if (a.out != b.out) o.fail(args[0] + " " + args[1] + " output differs");
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "construct thm-e e=6 exact", 1, construct_thm_e_six},
      {2, "construct thm-r d=10 even exact", 1, construct_thm_r_ten_even},
      {3, "verify thm-e e=6..10 over GF(32003)", 50, verify_thm_e_range},
      {4, "verify thm-r d=10 both parities over GF(32003)", 120, verify_thm_r_ten},
      {5, "family classification e=6..14, d=10..16", 5, classification_suite},
      {6, "Macaulay bound equals lex oracle, n<=100, i<=5", 30, macaulay_oracle},
      {7, "symmetric unimodal O-sequences, e in 3..5, h1<=6, all SI", 10,
       small_socle_enumeration},
      {8, "50 random single forms symmetric and compressed", 30, single_form_symmetry},
      {9, "sweep thm-e e=6 over 0,101,1009,32003", 60, characteristic_sweep},
      {10, "byte-identical JSON on repeated runs", 600, determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& ex) {
      o.fail(std::string("exception: ") + ex.what());
    }
    const double s = std::chrono::duration<double>(Clock::now() - start).count();
    if (s >= c.limit_seconds) o.fail("over limit " + fmt_seconds(c.limit_seconds));
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  [" << c.id << "] " << c.title << "  ("
              << fmt_seconds(s) << (o.note.empty() ? "" : "; " + o.note) << ")\n";
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
  return failures ? 1 : 0;
}
