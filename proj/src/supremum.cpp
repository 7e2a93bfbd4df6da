#include "supremum.hpp"

#include <map>
#include <stdexcept>
#include <tuple>

#include "errors.hpp"

namespace rw {

std::string term_tag_name(TermTag t) {
  switch (t) {
    case TermTag::M1: return "M1";
    case TermTag::M2: return "M2";
    case TermTag::M3: return "M3";
    case TermTag::IndR: return "ind_r";
    case TermTag::IndS: return "ind_s";
  }
  return "?";
}

namespace {

struct Mat {
  BigInt a{1}, b{0}, c{0}, d{1};  // acts on ratios r -> (a r + b)/(c r + d)
};

Mat compose_step(const Mat& m, uint64_t step) {
  // left-compose [[0,1],[1,step]]
  Mat r;
  r.a = m.c;
  r.b = m.d;
  r.c = m.a + BigInt(step) * m.c;
  r.d = m.b + BigInt(step) * m.d;
  return r;
}

Rational term_value(const ConvergentTable& t, int64_t n, const LevelTerm& lt) {
  const BigInt& qn = t.qp(n);
  const BigInt& qn1 = t.qp(n - 1);
  BigInt num = lt.alpha * qn + BigInt(lt.beta) * qn1 + BigInt(lt.gamma);
  BigInt den = BigInt(lt.delta) * qn + BigInt(lt.eps) * qn1;
  return Rational(num, den);
}

struct ComputedTerm {
  TermTag tag;
  int64_t level;
  Rational value;
};

}  // namespace

ExponentValue certified_supremum(const DirectiveSpec& spec, const EmitFn& emit) {
  if (!spec.exact()) {
    // finite truncation: plain maximum over the determined levels
    int64_t levels = static_cast<int64_t>(spec.preperiod.size());  // need a_{N+1}
    ConvergentTable table(spec, levels);
    ExponentValue out;
    out.truncated = true;
    bool first = true;
    for (int64_t n = 0; n < levels; ++n) {
      for (const LevelTerm& lt : emit(table, n)) {
        Rational v = term_value(table, n, lt);
        if (first || Surd(v) > out.value) {
          out.value = Surd(v);
          out.witness = Witness{lt.tag, static_cast<uint64_t>(n)};
          first = false;
        }
      }
    }
    if (first) throw ModeError("supremum: directive truncation emits no candidate");
    out.attained = true;
    return out;
  }

  const int64_t k = static_cast<int64_t>(spec.preperiod.size());
  const int64_t p = static_cast<int64_t>(spec.period.size());

  // The per-level emission depends on the phase inside the period and the two
  // trailing convergent parities; that combined state is eventually periodic.
  ConvergentTable table(spec, k + 6 * p + 4);
  auto state_of = [&](int64_t n) {
    int64_t phase = (n - k) % p;
    int pa = table.q(n - 1).is_even() ? 0 : 1;
    int pb = table.q(n).is_even() ? 0 : 1;
    int pc = table.p(n - 1).is_even() ? 0 : 1;
    int pd = table.p(n).is_even() ? 0 : 1;
    return std::tuple<int64_t, int, int, int, int>(phase, pa, pb, pc, pd);
  };

  std::map<std::tuple<int64_t, int, int, int, int>, int64_t> seen;
  int64_t cycle_start = -1, cycle_len = -1;
  for (int64_t n = k + 1;; ++n) {
    if (n > table.max_index() - 1) table.extend(n + 2 * p + 2);
    auto st = state_of(n);
    auto it = seen.find(st);
    if (it != seen.end()) {
      cycle_start = it->second;
      cycle_len = n - it->second;
      break;
    }
    seen.emplace(st, n);
  }
  int64_t pp = (cycle_len % 2 == 0) ? cycle_len : 2 * cycle_len;  // even => det +1

  int64_t n_end = cycle_start + 2 * pp;
  table.extend(n_end + pp + 2);

  // class data, indexed by j = (N - cycle_start) mod pp
  struct ClassInfo {
    Surd rho;                      // limit of q'_{N-1}/q'_N along the class
    Surd kappa;                    // exact contraction of t_N = q'_{N-1} - rho q'_N
    std::vector<LevelTerm> terms;  // emission, constant along the class
    std::vector<Surd> limits;      // per family
  };
  std::vector<ClassInfo> classes(static_cast<size_t>(pp));
  for (int64_t j = 0; j < pp; ++j) {
    int64_t base = cycle_start + j;
    Mat m;
    for (int64_t s = 1; s <= pp; ++s)
      m = compose_step(m, spec.exponent(static_cast<uint64_t>(base + s)));
    if (m.a * m.d - m.b * m.c != BigInt(1))
      throw std::logic_error("supremum: class matrix determinant is not +1");
    BigInt disc = (m.d - m.a) * (m.d - m.a) + BigInt(4) * m.b * m.c;
    Surd rho = (Surd(Rational(m.a - m.d)) + Surd::sqrt_of(disc)) / Surd(Rational(BigInt(2) * m.c));
    if (!(Surd(0) < rho && rho < Surd(1)))
      throw std::logic_error("supremum: ratio limit escaped (0,1)");
    Surd kappa = Surd(Rational(m.a)) - rho * Surd(Rational(m.c));
    if (!(Surd(0) < kappa && kappa < Surd(1)))
      throw std::logic_error("supremum: contraction factor escaped (0,1)");
    ClassInfo ci;
    ci.rho = rho;
    ci.kappa = kappa;
    ci.terms = emit(table, base);
    {
      // emission must be stable along the class
      std::vector<LevelTerm> again = emit(table, base + pp);
      if (again.size() != ci.terms.size())
        throw std::logic_error("supremum: emission not constant along class");
      for (size_t i = 0; i < again.size(); ++i) {
        if (again[i].tag != ci.terms[i].tag || again[i].alpha != ci.terms[i].alpha)
          throw std::logic_error("supremum: emission not constant along class");
      }
    }
    for (const LevelTerm& lt : ci.terms) {
      Surd num = Surd(Rational(lt.alpha)) + Surd(Rational(BigInt(lt.beta))) * rho;
      Surd den = Surd(Rational(BigInt(lt.delta))) + Surd(Rational(BigInt(lt.eps))) * rho;
      ci.limits.push_back(num / den);
    }
    classes[static_cast<size_t>(j)] = std::move(ci);
  }

  std::vector<ComputedTerm> computed;
  auto compute_terms = [&](int64_t from, int64_t to) {
    for (int64_t n = from; n < to; ++n) {
      for (const LevelTerm& lt : emit(table, n))
        computed.push_back({lt.tag, n, term_value(table, n, lt)});
    }
  };
  compute_terms(0, n_end);

  for (int round = 0;; ++round) {
    if (round > 200) throw std::logic_error("supremum: certification did not converge");

    Surd sup(0);
    bool have = false;
    for (const ComputedTerm& ct : computed) {
      Surd v(ct.value);
      if (!have || v > sup) {
        sup = v;
        have = true;
      }
    }
    for (const ClassInfo& ci : classes) {
      for (const Surd& l : ci.limits) {
        if (!have || l > sup) {
          sup = l;
          have = true;
        }
      }
    }
    if (!have) throw std::logic_error("supremum: no candidate terms emitted");

    // Certify: every unexamined level term stays strictly below its class
    // limit.  With value_N - L of the sign of (beta delta - alpha eps) t_N
    // + gamma (delta + eps rho) and |gamma| > 0 this is one comparison on the
    // first unexamined level, because t_N scales by kappa in (0,1) each pass.
    bool ok = true;
    for (int64_t j = 0; j < pp && ok; ++j) {
      const ClassInfo& ci = classes[static_cast<size_t>(j)];
      int64_t last = cycle_start + j;
      while (last + pp < n_end) last += pp;
      Surd t_last = Surd(Rational(table.qp(last - 1))) - ci.rho * Surd(Rational(table.qp(last)));
      Surd t_next = ci.kappa * t_last;
      for (const LevelTerm& lt : ci.terms) {
        BigInt bd_ae = BigInt(lt.beta) * BigInt(lt.delta) - lt.alpha * BigInt(lt.eps);
        Surd lhs = Surd(Rational(bd_ae)) * t_next;
        Surd rhs = Surd(Rational(BigInt(-lt.gamma))) *
                   (Surd(Rational(BigInt(lt.delta))) + Surd(Rational(BigInt(lt.eps))) * ci.rho);
        if (!(lhs < rhs)) {
          ok = false;
          break;
        }
      }
    }
    if (ok) {
      ExponentValue out;
      out.value = sup;
      for (const ComputedTerm& ct : computed) {
        if (Surd(ct.value) == sup) {
          if (!out.attained || static_cast<uint64_t>(ct.level) < out.witness->level) {
            out.attained = true;
            out.witness = Witness{ct.tag, static_cast<uint64_t>(ct.level)};
          }
        }
      }
      if (!out.attained) {
        for (int64_t j = 0; j < pp && !out.limit_of; ++j) {
          const ClassInfo& ci = classes[static_cast<size_t>(j)];
          for (size_t i = 0; i < ci.limits.size(); ++i) {
            if (ci.limits[i] == sup) {
              out.limit_of = Witness{ci.terms[i].tag, static_cast<uint64_t>(cycle_start + j)};
              break;
            }
          }
        }
      }
      return out;
    }

    int64_t new_end = n_end + pp;
    table.extend(new_end + 2);
    compute_terms(n_end, new_end);
    n_end = new_end;
  }
}

}  // namespace rw
