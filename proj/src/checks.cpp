#include "nil2/checks.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "nil2/generators.hpp"
#include "nil2/oracle.hpp"
#include "nil2/rword.hpp"

namespace nil2 {

namespace {

using Status = Outcome::Status;

std::string nf(const TensorElement& g) { return print_normal_form(g); }
std::string sc(const Scalar& s) { return "{" + s.to_string() + "}"; }

// Equality that is meaningful for the strategy: full normal forms when they
// are canonical, Hall parts otherwise.
bool same(const TensorElement& a, const TensorElement& b, const CReductionStrategy& s) {
  if (s.canonical() || s.ring == RingKind::Z || s.ring == RingKind::Q) return a == b;
  return a.hall == b.hall;
}

Outcome check(bool ok, const std::function<std::string()>& detail) {
  return ok ? Outcome::pass() : Outcome::fail(detail());
}

TensorElement rt(Sampler& s, const CReductionStrategy& st) { return random_tensor(s, st); }

std::vector<Property> axioms() {
  std::vector<Property> out;
  out.push_back({"axioms", "axiom-1", [](Sampler& s, const CReductionStrategy& st) {
                   const TensorElement g = rt(s, st);
                   const Scalar a = s.scalar(st.ring);
                   const TensorElement e = TensorElement::identity(st.schema, st.ring);
                   const bool ok = same(t_exp(st, g, Scalar::one(st.ring)), g, st) &&
                                   t_exp(st, g, Scalar::zero(st.ring)).is_identity() &&
                                   t_exp(st, e, a).is_identity();
                   return check(ok, [&] { return "g = " + nf(g) + "; alpha = " + sc(a); });
                 }});
  out.push_back({"axioms", "axiom-2.1", [](Sampler& s, const CReductionStrategy& st) {
                   const TensorElement g = rt(s, st);
                   const Scalar a = s.scalar(st.ring), b = s.scalar(st.ring);
                   return check(same(t_exp(st, g, a + b), t_mul(t_exp(st, g, a), t_exp(st, g, b)), st), [&] {
                     return "g = " + nf(g) + "; alpha = " + sc(a) + "; beta = " + sc(b);
                   });
                 }});
  out.push_back({"axioms", "axiom-2.2", [](Sampler& s, const CReductionStrategy& st) {
                   const TensorElement g = rt(s, st);
                   const Scalar a = s.scalar(st.ring), b = s.scalar(st.ring);
                   return check(same(t_exp(st, t_exp(st, g, a), b), t_exp(st, g, a * b), st), [&] {
                     return "g = " + nf(g) + "; alpha = " + sc(a) + "; beta = " + sc(b);
                   });
                 }});
  out.push_back({"axioms", "axiom-3", [](Sampler& s, const CReductionStrategy& st) {
                   const TensorElement g = rt(s, st), h = rt(s, st);
                   const Scalar a = s.scalar(st.ring);
                   const TensorElement conj = t_mul(t_mul(t_inv(h), g), h);
                   return check(same(t_exp(st, conj, a), t_mul(t_mul(t_inv(h), t_exp(st, g, a)), h), st), [&] {
                     return "g = " + nf(g) + "; h = " + nf(h) + "; alpha = " + sc(a);
                   });
                 }});
  out.push_back({"axioms", "axiom-4", [](Sampler& s, const CReductionStrategy& st) {
                   const auto [g, h] = random_commuting_pair(s, st);
                   const Scalar a = s.scalar(st.ring);
                   const bool ok = t_commutator(g, h).is_identity() &&
                                   same(t_exp(st, t_mul(g, h), a), t_mul(t_exp(st, g, a), t_exp(st, h, a)), st);
                   return check(ok, [&] { return "g = " + nf(g) + "; h = " + nf(h) + "; alpha = " + sc(a); });
                 }});
  out.push_back({"axioms", "hall-axiom-5", [](Sampler& s, const CReductionStrategy& st) {
                   const HallElement g = random_hall(s, st.schema, st.ring), h = random_hall(s, st.schema, st.ring);
                   const Scalar a = s.scalar(st.ring);
                   const HallElement lhs = hall_mul(hall_exp(g, a), hall_exp(h, a));
                   const HallElement rhs = hall_mul(hall_exp(hall_mul(g, h), a),
                                                    hall_exp(tau2(std::vector<HallElement>{g, h}), binomial(a, 2)));
                   return check(lhs == rhs, [&] {
                     return "g = " + nf(TensorElement::from_hall(g)) + "; h = " + nf(TensorElement::from_hall(h)) +
                            "; alpha = " + sc(a);
                   });
                 }});
  out.push_back({"axioms", "exp-defect", [](Sampler& s, const CReductionStrategy& st) {
                   const TensorElement g = rt(s, st);
                   const Scalar a = s.scalar(st.ring);
                   return check(t_exp(st, g, a).d - a * g.d == exp_defect(st, g.hall, a),
                                [&] { return "g = " + nf(g) + "; alpha = " + sc(a); });
                 }});
  out.push_back({"axioms", "retraction", [](Sampler& s, const CReductionStrategy& st) {
                   const TensorElement g = rt(s, st), h = rt(s, st);
                   const Scalar a = s.scalar(st.ring);
                   const bool ok = mu_retract(t_mul(g, h)) == hall_mul(mu_retract(g), mu_retract(h)) &&
                                   mu_retract(t_exp(st, g, a)) == hall_exp(mu_retract(g), a) &&
                                   t_mul(TensorElement::from_hall(g.hall), TensorElement::from_hall(h.hall)) ==
                                       TensorElement::from_hall(hall_mul(g.hall, h.hall));
                   return check(ok, [&] { return "g = " + nf(g) + "; h = " + nf(h) + "; alpha = " + sc(a); });
                 }});
  out.push_back({"axioms", "rational-degeneracy", [](Sampler& s, const CReductionStrategy& st) {
                   if (st.ring != RingKind::Z && st.ring != RingKind::Q) return Outcome::skip();
                   const RWordPtr w = random_word(s, st, 3);
                   return check(eval(w, st).d.is_zero(), [&] { return "w = " + to_string(w, *st.schema); });
                 }});
  return out;
}

// c-commutator identities; rank-2 strategies only.
std::vector<Property> facts() {
  std::vector<Property> out;
  auto fact = [&](const char* name, std::function<Outcome(Sampler&, const CReductionStrategy&)> fn) {
    out.push_back({"facts", name, [fn](Sampler& s, const CReductionStrategy& st) {
                     return st.canonical() ? fn(s, st) : Outcome::skip();
                   }});
  };
  fact("F7", [](Sampler& s, const CReductionStrategy& st) {
    const TensorElement f = rt(s, st), h = rt(s, st);
    const Scalar a = s.scalar(st.ring), b = s.scalar(st.ring);
    const DVector lhs = b * c_binary(st, f, h, a) + c_binary(st, t_exp(st, f, a), t_exp(st, h, a), b);
    const DVector rhs = a * c_binary(st, f, h, b) + c_binary(st, t_exp(st, f, b), t_exp(st, h, b), a);
    return check(lhs == rhs,
                 [&] { return "f = " + nf(f) + "; h = " + nf(h) + "; alpha = " + sc(a) + "; beta = " + sc(b); });
  });
  fact("F12", [](Sampler& s, const CReductionStrategy& st) {
    const TensorElement g = rt(s, st), h = rt(s, st);
    Scalar a = s.nonzero_scalar(st.ring);
    if (!a.is_invertible()) a = Scalar::from_rational(st.ring, s.nonzero_rational());
    const Scalar ai = a.inverse();
    const DVector lhs = c_binary(st, g, h, ai);
    const DVector rhs = (-ai) * c_binary(st, t_exp(st, g, ai), t_exp(st, h, ai), a);
    return check(lhs == rhs, [&] { return "g = " + nf(g) + "; h = " + nf(h) + "; alpha = " + sc(a); });
  });
  fact("F13", [](Sampler& s, const CReductionStrategy& st) {
    const TensorElement g = rt(s, st), h = rt(s, st);
    const Scalar a = s.scalar(st.ring);
    return check(c_binary(st, g, h, a) == c_binary(st, h, g, a),
                 [&] { return "g = " + nf(g) + "; h = " + nf(h) + "; alpha = " + sc(a); });
  });
  fact("F14", [](Sampler& s, const CReductionStrategy& st) {
    const TensorElement g = rt(s, st), h = rt(s, st), f = rt(s, st);
    const Scalar a = s.scalar(st.ring);
    const DVector lhs = c_binary(st, t_mul(g, h), f, a) + c_binary(st, g, h, a);
    const DVector rhs = c_binary(st, g, t_mul(h, f), a) + c_binary(st, h, f, a);
    return check(lhs == rhs, [&] {
      return "g = " + nf(g) + "; h = " + nf(h) + "; f = " + nf(f) + "; alpha = " + sc(a);
    });
  });
  fact("F15", [](Sampler& s, const CReductionStrategy& st) {
    const TensorElement g = rt(s, st), h = rt(s, st);
    const Scalar a = s.scalar(st.ring);
    return check(c_binary(st, t_mul(t_inv(h), g), h, a) == -c_binary(st, t_inv(h), g, a),
                 [&] { return "g = " + nf(g) + "; h = " + nf(h) + "; alpha = " + sc(a); });
  });
  fact("E10'", [](Sampler& s, const CReductionStrategy& st) {
    const Scalar a = s.scalar(st.ring), b = s.scalar(st.ring), l = s.scalar(st.ring);
    const Scalar p = s.scalar(st.ring), q = s.scalar(st.ring);
    const DVector lhs = ccoord(st, (p + q) * a, (p + q) * b, l);
    const DVector rhs = ccoord(st, p * a, p * b, l) + ccoord(st, q * a, q * b, l);
    return check(lhs == rhs, [&] {
      return "g = x^" + sc(p * a) + " y^" + sc(p * b) + "; h = x^" + sc(q * a) + " y^" + sc(q * b) +
             "; lambda = " + sc(l);
    });
  });
  fact("E8", [](Sampler& s, const CReductionStrategy& st) {
    const Scalar a = s.scalar(st.ring), b = s.scalar(st.ring), l = s.scalar(st.ring), m = s.scalar(st.ring);
    return check(ccoord(st, a, b, l + m) == ccoord(st, a, b, l) + ccoord(st, a, b, m), [&] {
      return "g = x^" + sc(a) + "; h = y^" + sc(b) + "; alpha = " + sc(l) + "; beta = " + sc(m);
    });
  });
  fact("E9", [](Sampler& s, const CReductionStrategy& st) {
    const Scalar a = s.scalar(st.ring), b = s.scalar(st.ring), l = s.scalar(st.ring), m = s.scalar(st.ring);
    return check(ccoord(st, a, b, l * m) == ccoord(st, l * a, l * b, m) + m * ccoord(st, a, b, l), [&] {
      return "g = x^" + sc(a) + "; h = y^" + sc(b) + "; alpha = " + sc(l) + "; beta = " + sc(m);
    });
  });
  fact("Q-linearity", [](Sampler& s, const CReductionStrategy& st) {
    const Scalar a = s.scalar(st.ring), b = s.scalar(st.ring);
    const Rational q = s.rational();
    const Scalar t = Scalar::t(st.ring);
    return check(ccoord(st, a.scaled(q), b.scaled(q), t) == Scalar::from_rational(st.ring, q) * ccoord(st, a, b, t),
                 [&] { return "g = x^" + sc(a) + "; h = y^" + sc(b) + "; q = " + to_string(q); });
  });
  return out;
}

std::vector<Property> hall_oracle() {
  std::vector<Property> out;
  auto int_hall = [](Sampler& s, const CReductionStrategy& st) {
    HallElement g = HallElement::identity(st.schema, RingKind::Z);
    for (auto& x : g.a) x = Scalar(RingKind::Z, s.integer(-5, 5));
    for (auto& x : g.b) x = Scalar(RingKind::Z, s.integer(-5, 5));
    return g;
  };
  out.push_back({"hall-oracle", "exp-vs-repeated-product", [int_hall](Sampler& s, const CReductionStrategy& st) {
                   const HallElement g = int_hall(s, st);
                   const long k = s.integer(-8, 8);
                   return check(hall_exp(g, Scalar(RingKind::Z, k)) == oracle::int_exp_oracle(g, k), [&] {
                     return "g = " + nf(TensorElement::from_hall(g)) + "; k = " + std::to_string(k);
                   });
                 }});
  out.push_back({"hall-oracle", "matrix-homomorphism", [int_hall](Sampler& s, const CReductionStrategy& st) {
                   if (!st.schema->is_free_rank2()) return Outcome::skip();
                   const HallElement g = int_hall(s, st), h = int_hall(s, st);
                   using oracle::matrix_model;
                   const bool ok = matrix_model(hall_mul(g, h)) == matrix_model(g) * matrix_model(h) &&
                                   matrix_model(hall_inv(g)) == matrix_model(g).inverse();
                   return check(ok, [&] {
                     return "g = " + nf(TensorElement::from_hall(g)) + "; h = " + nf(TensorElement::from_hall(h));
                   });
                 }});
  out.push_back({"hall-oracle", "commutator-vs-matrix", [int_hall](Sampler& s, const CReductionStrategy& st) {
                   if (!st.schema->is_free_rank2()) return Outcome::skip();
                   const HallElement g = int_hall(s, st), h = int_hall(s, st);
                   using oracle::matrix_model;
                   const oracle::UniMat3 mg = matrix_model(g), mh = matrix_model(h);
                   const bool ok = matrix_model(hall_commutator(g, h)) == mg.inverse() * mh.inverse() * mg * mh;
                   return check(ok, [&] {
                     return "g = " + nf(TensorElement::from_hall(g)) + "; h = " + nf(TensorElement::from_hall(h));
                   });
                 }});
  return out;
}

std::vector<Property> confluence() {
  std::vector<Property> out;
  out.push_back({"confluence", "subscript-split", [](Sampler& s, const CReductionStrategy& st) {
                   if (!st.canonical()) return Outcome::skip();
                   const Scalar a = s.scalar(st.ring), b = s.scalar(st.ring), l = s.scalar(st.ring);
                   return check(ccoord(st, a, b, l, SubscriptSplit::TFirst) == ccoord(st, a, b, l, SubscriptSplit::TLast),
                                [&] { return "g = x^" + sc(a) + "; h = y^" + sc(b) + "; lambda = " + sc(l); });
                 }});
  out.push_back({"confluence", "bracketing", [](Sampler& s, const CReductionStrategy& st) {
                   const RWordPtr a = random_word(s, st, 1), b = random_word(s, st, 1), c = random_word(s, st, 1);
                   const Scalar e = s.scalar(st.ring);
                   const RWordPtr left = RWord::exp(RWord::mul({RWord::mul({a, b}), c}), e);
                   const RWordPtr right = RWord::exp(RWord::mul({a, RWord::mul({b, c})}), e);
                   return check(same(eval(left, st), eval(right, st), st), [&] {
                     return "left = " + to_string(left, *st.schema) + "; right = " + to_string(right, *st.schema);
                   });
                 }});
  out.push_back({"confluence", "c-multi-bracketing", [](Sampler& s, const CReductionStrategy& st) {
                   if (!st.canonical()) return Outcome::skip();
                   const TensorElement g = rt(s, st), h = rt(s, st), f = rt(s, st);
                   const Scalar a = s.scalar(st.ring);
                   const DVector lhs = c_multi(st, std::vector<TensorElement>{g, h, f}, a);
                   const DVector rhs = c_binary(st, g, t_mul(h, f), a) + c_binary(st, h, f, a);
                   return check(lhs == rhs, [&] {
                     return "g = " + nf(g) + "; h = " + nf(h) + "; f = " + nf(f) + "; alpha = " + sc(a);
                   });
                 }});
  out.push_back({"confluence", "print-parse-round-trip", [](Sampler& s, const CReductionStrategy& st) {
                   if (!st.canonical() && st.ring != RingKind::Z && st.ring != RingKind::Q) return Outcome::skip();
                   RWordPtr w = random_word(s, st, 3);
                   // Powers of products carry most of the D-part.
                   if (s.chance(50)) w = RWord::exp(RWord::mul({w, random_word(s, st, 2)}), s.scalar(st.ring));
                   const TensorElement g = eval(parse_word(to_string(w, *st.schema), *st.schema, st.ring), st);
                   const std::string text = print_normal_form(g);
                   const TensorElement back = eval(parse_word(text, *st.schema, st.ring), st);
                   return check(back == g && print_normal_form(back) == text,
                                [&] { return "w = " + to_string(w, *st.schema); });
                 }});
  return out;
}

}  // namespace

const std::vector<Property>& all_properties() {
  static const std::vector<Property> props = [] {
    std::vector<Property> all;
    for (auto part : {axioms(), facts(), hall_oracle(), confluence()})
      for (auto& p : part) all.push_back(std::move(p));
    return all;
  }();
  return props;
}

std::vector<std::string> suite_names() { return {"axioms", "facts", "hall-oracle", "confluence"}; }

PropertyReport run_property(const Property& p, const RunConfig& config) {
  PropertyReport report{p.suite, p.name, 0, 0, 0, {}};
  std::uint64_t salt = 0xcbf29ce484222325ULL;  // FNV-1a of the property name
  for (unsigned char c : p.suite + "/" + p.name) salt = (salt ^ c) * 0x100000001b3ULL;
  salt &= 0xffffffffULL;
  const long n = std::max(0L, config.cases);
  std::vector<Outcome> results(static_cast<std::size_t>(n));
  std::atomic<long> next{0};
  auto worker = [&] {
    for (long i; (i = next++) < n;) {
      Sampler s(config.seed, (salt << 32) ^ static_cast<std::uint64_t>(i));
      try {
        results[static_cast<std::size_t>(i)] = p.run(s, config.strategy);
      } catch (const std::exception& e) {
        results[static_cast<std::size_t>(i)] =
            Outcome::fail("case " + std::to_string(i) + " raised: " + e.what());
      }
    }
  };
  unsigned workers = config.workers ? config.workers : std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<long>(workers, std::max(1L, n)));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& r : results) {
    switch (r.status) {
      case Status::Pass:
        ++report.passed;
        break;
      case Status::Skip:
        ++report.skipped;
        break;
      case Status::Fail:
        ++report.failed;
        if (report.counterexample.empty() || r.detail.size() < report.counterexample.size())
          report.counterexample = r.detail;
        break;
    }
  }
  return report;
}

std::vector<PropertyReport> run_suite(std::string_view suite, const RunConfig& config) {
  const auto names = suite_names();
  if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end())
    throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
  std::vector<PropertyReport> out;
  for (const auto& p : all_properties())
    if (suite == "all" || p.suite == suite) out.push_back(run_property(p, config));
  return out;
}

std::string format_report(const std::vector<PropertyReport>& reports) {
  int width = 8;
  for (const auto& r : reports) width = std::max(width, static_cast<int>(r.suite.size() + r.name.size() + 1));
  std::ostringstream os;
  os << std::left << std::setw(width) << "property" << std::right << "  status" << std::setw(8) << "passed"
     << std::setw(8) << "failed" << std::setw(9) << "skipped" << "\n";
  for (const auto& r : reports) {
    const char* status = r.failed ? "FAIL" : (r.passed ? "pass" : "skip");
    os << std::left << std::setw(width) << (r.suite + "/" + r.name) << std::right << std::setw(8) << status
       << std::setw(8) << r.passed << std::setw(8) << r.failed << std::setw(9) << r.skipped << "\n";
  }
  for (const auto& r : reports)
    if (r.failed) os << "counterexample " << r.suite << "/" << r.name << ": " << r.counterexample << "\n";
  return os.str();
}

}  // namespace nil2
