#include "tracefree/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "tracefree/error.hpp"

namespace tracefree {

// ---------------------------------------------------------------- VarKey

namespace {

void require_increasing(std::initializer_list<int> idx, const char* what) {
  int prev = 0;
  for (int i : idx) {
    if (i <= prev || i > 255) {
      throw Error(ErrorKind::IndexOutOfRange, std::string("invalid indices for ") + what);
    }
    prev = i;
  }
}

VarKey make_key(VarKey::Kind kind, std::initializer_list<int> idx) {
  VarKey k;
  k.kind = kind;
  std::size_t pos = 0;
  for (int i : idx) k.idx[pos++] = static_cast<std::uint8_t>(i);
  return k;
}

void check_range(int i, int n) {
  if (i < 1 || i > n) {
    throw Error(ErrorKind::IndexOutOfRange, "index " + std::to_string(i) + " outside 1.." + std::to_string(n));
  }
}

}  // namespace

VarKey VarKey::pair(int i, int j) {
  require_increasing({i, j}, "pair variable");
  return make_key(Kind::Pair, {i, j});
}

VarKey VarKey::triple(int i, int j, int k) {
  require_increasing({i, j, k}, "triple variable");
  return make_key(Kind::Triple, {i, j, k});
}

VarKey VarKey::kch(int i, int j) {
  require_increasing({i, j}, "contact homology variable");
  return make_key(Kind::KchPair, {i, j});
}

VarKey VarKey::cover_pair(int a, int b) {
  require_increasing({a, b}, "cover pair variable");
  return make_key(Kind::CoverPair, {a, b});
}

VarKey VarKey::cover_quad(int c, int d, int e) {
  require_increasing({1, c, d, e}, "cover quad variable");
  return make_key(Kind::CoverQuad, {1, c, d, e});
}

int VarKey::arity() const {
  switch (kind) {
    case Kind::Pair:
    case Kind::KchPair:
    case Kind::CoverPair: return 2;
    case Kind::Triple: return 3;
    case Kind::CoverQuad: return 4;
  }
  return 0;
}

std::string VarKey::index_string() const {
  bool wide = false;
  for (int a = 0; a < arity(); ++a) wide = wide || idx[a] > 9;
  std::string out;
  for (int a = 0; a < arity(); ++a) {
    if (wide && a > 0) out.push_back('_');
    out += std::to_string(idx[a]);
  }
  return out;
}

std::string VarKey::name() const {
  char prefix = 'x';
  if (kind == Kind::KchPair) prefix = 'a';
  if (kind == Kind::CoverPair || kind == Kind::CoverQuad) prefix = 'z';
  std::string digits = index_string();
  if (digits.find('_') != std::string::npos) return std::string(1, prefix) + "_" + digits;
  return std::string(1, prefix) + digits;
}

VarKey parse_var(const std::string& name) {
  if (name.size() < 3) throw Error(ErrorKind::MalformedInput, "bad variable '" + name + "'");
  char prefix = name[0];
  std::vector<int> idx;
  if (name[1] == '_') {
    std::stringstream in(name.substr(2));
    std::string part;
    while (std::getline(in, part, '_')) {
      if (part.empty() || !std::all_of(part.begin(), part.end(), ::isdigit)) {
        throw Error(ErrorKind::MalformedInput, "bad variable '" + name + "'");
      }
      idx.push_back(std::stoi(part));
    }
  } else {
    for (std::size_t p = 1; p < name.size(); ++p) {
      if (!std::isdigit(static_cast<unsigned char>(name[p]))) {
        throw Error(ErrorKind::MalformedInput, "bad variable '" + name + "'");
      }
      idx.push_back(name[p] - '0');
    }
  }
  if (prefix == 'x' && idx.size() == 2) return VarKey::pair(idx[0], idx[1]);
  if (prefix == 'x' && idx.size() == 3) return VarKey::triple(idx[0], idx[1], idx[2]);
  if (prefix == 'a' && idx.size() == 2) return VarKey::kch(idx[0], idx[1]);
  if (prefix == 'z' && idx.size() == 2) return VarKey::cover_pair(idx[0], idx[1]);
  if (prefix == 'z' && idx.size() == 4 && idx[0] == 1) return VarKey::cover_quad(idx[1], idx[2], idx[3]);
  throw Error(ErrorKind::MalformedInput, "bad variable '" + name + "'");
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(VarKey v, unsigned e) {
  if (e > 0) factors_.emplace_back(v, e);
}

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end());
  for (const auto& [v, e] : factors) {
    if (e == 0) continue;
    if (!factors_.empty() && factors_.back().first == v) {
      factors_.back().second += e;
    } else {
      factors_.emplace_back(v, e);
    }
  }
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

unsigned Monomial::exponent(const VarKey& v) const {
  for (const auto& [key, e] : factors_) {
    if (key == v) return e;
  }
  return 0;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  auto& f = out.factors_;
  f.reserve(a.factors_.size() + b.factors_.size());
  auto ia = a.factors_.begin(), ib = b.factors_.begin();
  while (ia != a.factors_.end() || ib != b.factors_.end()) {
    if (ib == b.factors_.end() || (ia != a.factors_.end() && ia->first < ib->first)) {
      f.push_back(*ia++);
    } else if (ia == a.factors_.end() || ib->first < ia->first) {
      f.push_back(*ib++);
    } else {
      f.emplace_back(ia->first, ia->second + ib->second);
      ++ia;
      ++ib;
    }
  }
  return out;
}

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial(), c);
}

Polynomial Polynomial::variable(const VarKey& v) { return term(Rational(1), Monomial(v)); }

Polynomial Polynomial::term(const Rational& c, const Monomial& m) {
  Polynomial p;
  if (c != 0) p.terms_.emplace(m, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::constant_term() const {
  auto it = terms_.find(Monomial());
  return it == terms_.end() ? Rational(0) : it->second;
}

unsigned Polynomial::total_degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

std::set<VarKey> Polynomial::variables() const {
  std::set<VarKey> vars;
  for (const auto& [m, c] : terms_) {
    for (const auto& f : m.factors()) vars.insert(f.first);
  }
  return vars;
}

std::vector<Rational> Polynomial::univariate_coefficients(const VarKey& v) const {
  std::vector<Rational> coeffs;
  for (const auto& [m, c] : terms_) {
    unsigned e = 0;
    for (const auto& [key, exp] : m.factors()) {
      if (key != v) throw Error(ErrorKind::ForeignVariable, key.name() + " in univariate polynomial");
      e = exp;
    }
    if (coeffs.size() <= e) coeffs.resize(e + 1);
    coeffs[e] = c;
  }
  return coeffs;
}

Polynomial Polynomial::from_univariate(const std::vector<Rational>& coeffs, const VarKey& v) {
  Polynomial p;
  for (std::size_t e = 0; e < coeffs.size(); ++e) {
    if (coeffs[e] != 0) p.add_term(Monomial(v, static_cast<unsigned>(e)), coeffs[e]);
  }
  return p;
}

Polynomial Polynomial::substitute(const std::map<VarKey, Polynomial>& map) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    Polynomial term_value(c);
    std::vector<Monomial::Factor> kept;
    for (const auto& [v, e] : m.factors()) {
      auto it = map.find(v);
      if (it == map.end()) {
        kept.emplace_back(v, e);
      } else {
        term_value *= pow(it->second, e);
      }
    }
    term_value *= Polynomial::term(Rational(1), Monomial(std::move(kept)));
    out += term_value;
  }
  return out;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, Rational(-c));
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, Rational(ca * cb));
  }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial operator-(Polynomial a) {
  for (auto& [m, c] : a.terms_) c = -c;
  return a;
}

Polynomial pow(const Polynomial& p, unsigned e) {
  Polynomial result(1);
  Polynomial base = p;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

namespace {

// Graded reverse lexicographic comparison, VarKey order = variable order
// (smaller key = larger variable).
bool grevlex_greater(const Monomial& a, const Monomial& b) {
  unsigned da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  auto ia = fa.rbegin(), ib = fb.rbegin();
  while (ia != fa.rend() || ib != fb.rend()) {
    if (ia != fa.rend() && ib != fb.rend() && ia->first == ib->first) {
      if (ia->second != ib->second) return ia->second < ib->second;
      ++ia;
      ++ib;
    } else if (ib == fb.rend() || (ia != fa.rend() && ib->first < ia->first)) {
      // a has a smaller variable that b lacks.
      return false;
    } else {
      return true;
    }
  }
  return false;
}

}  // namespace

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const Terms::value_type*> sorted;
  for (const auto& t : terms_) sorted.push_back(&t);
  std::sort(sorted.begin(), sorted.end(),
            [](const auto* x, const auto* y) { return grevlex_greater(x->first, y->first); });
  std::ostringstream out;
  bool first = true;
  for (const auto* t : sorted) {
    const Monomial& m = t->first;
    Rational c = t->second;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    bool unit = (c == 1);
    if (!unit || m.is_one()) out << tracefree::to_string(c);
    bool need_star = !unit;
    for (const auto& [v, e] : m.factors()) {
      if (need_star) out << '*';
      out << v.name();
      if (e > 1) out << '^' << e;
      need_star = true;
    }
  }
  return out.str();
}

// ---------------------------------------------------------------- builders

Polynomial pair_var(int i, int j, int n) {
  check_range(i, n);
  check_range(j, n);
  if (i == j) return Polynomial(2);
  return Polynomial::variable(VarKey::pair(std::min(i, j), std::max(i, j)));
}

Polynomial triple_var(int i, int j, int k, int n) {
  check_range(i, n);
  check_range(j, n);
  check_range(k, n);
  if (i == j || j == k || i == k) return Polynomial();
  std::array<int, 3> idx{i, j, k};
  int sign = 1;
  // Bubble sort; each swap is a transposition.
  for (int pass = 0; pass < 2; ++pass) {
    for (int p = 0; p + 1 < 3; ++p) {
      if (idx[p] > idx[p + 1]) {
        std::swap(idx[p], idx[p + 1]);
        sign = -sign;
      }
    }
  }
  Polynomial v = Polynomial::variable(VarKey::triple(idx[0], idx[1], idx[2]));
  return sign > 0 ? v : -v;
}

Polynomial kch_var(int i, int j, int n) {
  check_range(i, n);
  check_range(j, n);
  if (i == j) return Polynomial(-2);
  return Polynomial::variable(VarKey::kch(std::min(i, j), std::max(i, j)));
}

Polynomial det(const std::vector<std::vector<Polynomial>>& matrix) {
  std::size_t size = matrix.size();
  for (const auto& row : matrix) {
    if (row.size() != size) throw Error(ErrorKind::NonSquare, "determinant of a non-square matrix");
  }
  if (size == 0) return Polynomial(1);
  if (size == 1) return matrix[0][0];
  if (size == 2) return matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0];
  Polynomial result;
  for (std::size_t col = 0; col < size; ++col) {
    if (matrix[0][col].is_zero()) continue;
    std::vector<std::vector<Polynomial>> minor;
    for (std::size_t r = 1; r < size; ++r) {
      std::vector<Polynomial> row;
      for (std::size_t c = 0; c < size; ++c) {
        if (c != col) row.push_back(matrix[r][c]);
      }
      minor.push_back(std::move(row));
    }
    Polynomial cofactor = matrix[0][col] * det(minor);
    if (col % 2 == 0) {
      result += cofactor;
    } else {
      result -= cofactor;
    }
  }
  return result;
}

ComplexValue evaluate(const Polynomial& p, const Assignment& assignment) {
  ComplexValue total(Rational(0));
  for (const auto& [m, c] : p.terms()) {
    ComplexValue term{c};
    for (const auto& [v, e] : m.factors()) {
      auto it = assignment.find(v);
      if (it == assignment.end()) throw Error(ErrorKind::UnboundVariable, v.name());
      term = term * pow(it->second, e);
    }
    total = total + term;
  }
  return total;
}

Complex det(std::vector<std::vector<Complex>> a) {
  std::size_t n = a.size();
  for (const auto& row : a) {
    if (row.size() != n) throw Error(ErrorKind::NonSquare, "determinant of a non-square matrix");
  }
  Complex result(1.0L, 0.0L);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    }
    if (a[pivot][col] == Complex(0.0L, 0.0L)) return Complex(0.0L, 0.0L);
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      result = -result;
    }
    result *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      Complex factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
    }
  }
  return result;
}

}  // namespace tracefree
