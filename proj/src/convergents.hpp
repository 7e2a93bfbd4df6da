#ifndef RW_CONVERGENTS_HPP
#define RW_CONVERGENTS_HPP

#include <string>
#include <vector>

#include "bigint.hpp"
#include "directive.hpp"
#include "surd.hpp"

namespace rw {

// Table of convergents p_N, q_N and q'_N = p_N + q_N for
// theta = [0; a_1, a_2, ...], rows N = -1, 0, 1, ...
// All three columns satisfy X_N = a_N X_{N-1} + X_{N-2}; the sentinel
// q'_{-2} = 1 closes the recurrence at N = 0 (a_0 = 0).
class ConvergentTable {
 public:
  ConvergentTable(const DirectiveSpec& spec, int64_t n_max);

  const BigInt& p(int64_t n) const { return at(p_, n); }
  const BigInt& q(int64_t n) const { return at(q_, n); }
  const BigInt& qp(int64_t n) const;  // accepts n >= -2
  uint64_t a(int64_t n) const;        // a_0 = 0
  int64_t max_index() const { return n_max_; }

  void extend(int64_t new_n_max);

  std::string to_csv() const;  // N,a_N,p_N,q_N,qp_N

 private:
  DirectiveSpec spec_;
  int64_t n_max_;
  std::vector<BigInt> p_, q_, qp_;  // index N+1
  static const BigInt& at(const std::vector<BigInt>& v, int64_t n);
};

enum class ConvergentColumn { P, Q };

// bit N = (column_N mod 2) for N = 0..n_max
std::vector<int> parity_pattern(const DirectiveSpec& spec, ConvergentColumn column,
                                int64_t n_max);

// Exact limit of q'_{N-1}/q'_N along N = preperiod + residue_class (mod |period|),
// as the attracting fixed point of the period's Moebius composition; lies in (0,1).
// Throws ModeError for finite specs.
Surd ratio_limit(const DirectiveSpec& spec, uint64_t residue_class);

}  // namespace rw

#endif
