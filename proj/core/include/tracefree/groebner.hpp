#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "tracefree/poly.hpp"

namespace tracefree {

namespace detail {
struct BasisData;
}

/// Monomial order over an explicit variable list, largest variable first.
/// For elimination with lex, list the variables to eliminate first.
struct MonomialOrder {
  enum class Kind { GrevLex, Lex };

  Kind kind = Kind::GrevLex;
  std::vector<VarKey> variables;

  static MonomialOrder grevlex(std::vector<VarKey> vars) { return {Kind::GrevLex, std::move(vars)}; }
  static MonomialOrder lex(std::vector<VarKey> vars) { return {Kind::Lex, std::move(vars)}; }
};

struct GroebnerOptions {
  /// Maximum number of S-pairs reduced before giving up.
  std::size_t max_pairs = 500000;
  /// Maximum number of terms in any intermediate polynomial (0 = unlimited).
  std::size_t max_terms = 200000;
};

/// Reduced Groebner basis: monic, inter-reduced, sorted by increasing leading
/// monomial. Immutable and cheap to copy.
class GroebnerBasis {
 public:
  const MonomialOrder& order() const;
  const std::vector<Polynomial>& basis() const;
  /// Leading monomials of the basis elements, same order as basis().
  std::vector<Monomial> leading_monomials() const;
  bool is_unit() const;
  /// Number of S-pairs reduced while computing this basis.
  std::size_t pairs_reduced() const;

  const detail::BasisData& data() const { return *data_; }

 private:
  friend GroebnerBasis buchberger(const std::vector<Polynomial>&, const MonomialOrder&, const GroebnerOptions&);
  std::shared_ptr<const detail::BasisData> data_;
};

/// Buchberger's algorithm with the normal selection strategy and the
/// Gebauer-Moeller criteria. Variables must all be listed in the order.
/// Throws Error{ResourceLimit, ForeignVariable}.
GroebnerBasis buchberger(const std::vector<Polynomial>& generators, const MonomialOrder& order,
                         const GroebnerOptions& options = {});

/// Remainder of p modulo the basis; zero iff p lies in the ideal.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

/// Krull dimension from the leading monomials; -1 for the unit ideal.
int dimension(const GroebnerBasis& gb);

}  // namespace tracefree
