#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gtfa/types.hpp"

namespace gtfa {

/// Multiplication table of a finite group on the dense element indices 0..order-1.
struct FiniteGroup {
  int order = 0;
  int identity = 0;
  std::vector<int> cayley;   // row-major, cayley[x * order + y] = index of xy
  std::vector<int> inverse;  // inverse[x] = index of x^{-1}

  int mul(int x, int y) const { return cayley[static_cast<std::size_t>(x) * order + y]; }
  int inv(int x) const { return inverse[x]; }
};

/// One irreducible unitary representation, stored densely per element.
struct Irrep {
  int dim = 1;
  std::vector<Matrix> matrices;  // matrices[x] = eta(x), dim x dim

  const Matrix& operator()(int x) const { return matrices[x]; }
  Complex character(int x) const { return matrices[x].trace(); }
};

struct UnitaryDual {
  std::vector<Irrep> irreps;
  int trivial_index = 0;
};

/// A finite group together with a chosen unitary dual and the packed
/// Fourier layout used by every transform in the library.
///
/// Matrix-valued functions on the dual are stored as one complex column of
/// length |G|: the block of irrep eta occupies rows offset(eta) ..
/// offset(eta) + dim(eta)^2 - 1 in column-major order. Peter-Weyl makes the
/// packed length equal to |G|.
class Group {
 public:
  Group(FiniteGroup table, UnitaryDual dual, std::string name);

  const FiniteGroup& table() const { return table_; }
  const UnitaryDual& dual() const { return dual_; }
  const std::string& name() const { return name_; }

  int order() const { return table_.order; }
  int identity() const { return table_.identity; }
  int mul(int x, int y) const { return table_.mul(x, y); }
  int inv(int x) const { return table_.inv(x); }

  int irrep_count() const { return static_cast<int>(dual_.irreps.size()); }
  int trivial() const { return dual_.trivial_index; }
  const Irrep& irrep(int eta) const { return dual_.irreps[eta]; }
  int dim(int eta) const { return dual_.irreps[eta].dim; }
  int offset(int eta) const { return offsets_[eta]; }
  /// Irrep owning a packed row.
  int irrep_of_row(int row) const { return row_irrep_[row]; }

  /// Synthesis(x, r) = d_eta * eta(x)(j, k) where r packs entry (k, j) of a
  /// block; Synthesis * packed coefficients gives sum_eta d_eta tr(eta(x) c(eta)).
  const Matrix& synthesis() const { return synthesis_; }
  /// Analysis(r, x) = conj(eta(x)(j, k)) / |G|; Analysis * u gives the packed
  /// blocks (1/|G|) sum_x u(x) eta(x)^*.
  const Matrix& analysis() const { return analysis_; }
  /// Plancherel weight d_eta of each packed row.
  const RealVector& row_weights() const { return row_weights_; }

  /// N when the group is Z/NZ with the standard labeling (x + y mod N,
  /// identity 0, irrep k equal to x -> e^{i 2 pi k x / N}).
  std::optional<int> cyclic_order() const { return cyclic_order_; }

 private:
  FiniteGroup table_;
  UnitaryDual dual_;
  std::string name_;
  std::vector<int> offsets_;
  std::vector<int> row_irrep_;
  Matrix synthesis_;
  Matrix analysis_;
  RealVector row_weights_;
  std::optional<int> cyclic_order_;
};

using GroupPtr = std::shared_ptr<const Group>;

/// Z/NZ with characters ordered by exponent k = 0..N-1.
GroupPtr build_cyclic(int n);

/// Dihedral group of order 2n. Element index k is r^k, n + k is s r^k.
/// One-dimensional irreps come first (trivial, sign, then the two extra
/// characters for even n), followed by the two-dimensional ones j = 1, 2, ...
GroupPtr build_dihedral(int n);

/// Direct product A x B; element (a, b) has index a * |B| + b and the irreps
/// are Kronecker products ordered with A's irrep index outermost.
GroupPtr build_product(const GroupPtr& a, const GroupPtr& b);

/// Group Table Format reader. Throws ParseError for malformed text and
/// InvariantError listing every failed structural check.
GroupPtr load_group_file(const std::string& path);
GroupPtr parse_group_text(std::string_view text, const std::string& name = "file");
std::string format_group_text(const Group& g);

/// Structural checks on a table and dual. Returns one message per violation;
/// empty means the pair is a valid finite group with a complete unitary dual.
std::vector<std::string> check_group_invariants(const FiniteGroup& table, const UnitaryDual& dual,
                                                double algebraic_tol = 1e-10,
                                                double statistical_tol = 1e-8);

/// max over irreps and index pairs of
/// |(1/|G|) sum_x eta_jk(x) conj(eta_lm(x)) - delta_jl delta_km / d_eta|.
double schur_orthogonality_defect(const Group& g);

/// For each irrep, index of the dual member whose character matches the
/// contragredient x -> eta(x^{-1})^T, or -1 when none matches within tol.
std::vector<int> contragredient_map(const Group& g, double tol = 1e-8);

/// Character table, chi[eta][x].
std::vector<std::vector<Complex>> character_table(const Group& g);

}  // namespace gtfa
