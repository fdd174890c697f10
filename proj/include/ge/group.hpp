#pragma once

#include <complex>
#include <memory>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ge/errors.hpp"

namespace ge {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

/// A finite group as a validated multiplication table over dense element
/// indices 0..order-1. Element 0 is always the identity. Immutable after
/// construction; safe to share across threads.
class FiniteGroup {
public:
  /// Validates the full set of group axioms: Latin-square rows/columns,
  /// a two-sided identity at index 0, two-sided inverses and exhaustive
  /// associativity. Throws NotAGroup with the failed axiom.
  FiniteGroup(std::vector<std::vector<int>> mul, std::string name);

  int order() const { return order_; }
  int mul(int g, int h) const { return mul_[g][h]; }
  int inv(int g) const { return inv_[g]; }
  int identity() const { return 0; }
  const std::string& name() const { return name_; }

  bool is_abelian() const { return abelian_; }

  /// Conjugacy classes, each a sorted list of element indices. The class of
  /// the identity comes first.
  const std::vector<std::vector<int>>& conjugacy_classes() const {
    return classes_;
  }
  /// Index of the conjugacy class containing g.
  int class_of(int g) const { return class_of_[g]; }

  enum class Catalog { None, Cyclic, S3 };
  Catalog catalog() const { return catalog_; }
  int cyclic_n() const { return cyclic_n_; }

private:
  friend FiniteGroup cyclic_group(int n);
  friend FiniteGroup symmetric_group_s3();

  int order_ = 0;
  std::vector<std::vector<int>> mul_;
  std::vector<int> inv_;
  std::string name_;
  bool abelian_ = false;
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;
  Catalog catalog_ = Catalog::None;
  int cyclic_n_ = 0;
};

/// Z_n with mul(a,b) = (a+b) mod n.
FiniteGroup cyclic_group(int n);

/// S3 as permutations of {0,1,2} in lexicographic one-line order, so the
/// identity permutation gets index 0. mul(g,h) composes as g after h.
FiniteGroup symmetric_group_s3();

/// Build a group from a catalog name ("z2", "z3", "zn:<n>", "s3") or from an
/// explicit table file ("table:<path>", format: "order n" then n rows of n
/// indices). Throws NotAGroup / ConfigError.
FiniteGroup build_group(const std::string& spec);

/// Parse a multiplication table file (see build_group) into a FiniteGroup.
FiniteGroup group_from_table_file(const std::string& path);

/// A unitary irreducible representation of a FiniteGroup, stored as one
/// dim x dim matrix per element. Construction verifies the homomorphism
/// property, unitarity and that the character is a class function.
class Irrep {
public:
  Irrep(const FiniteGroup& group, std::vector<Mat> matrices, std::string label);

  int dim() const { return dim_; }
  const std::string& label() const { return label_; }
  const Mat& matrix(int g) const { return matrices_[g]; }
  cplx character(int g) const { return characters_[g]; }
  const std::vector<cplx>& characters() const { return characters_; }

private:
  int dim_;
  std::string label_;
  std::vector<Mat> matrices_;
  std::vector<cplx> characters_;
};

/// The complete list of pairwise-inequivalent irreps of a group.
/// Construction checks sum d_r^2 = |G| and Peter-Weyl orthogonality.
class IrrepSet {
public:
  IrrepSet(const FiniteGroup& group, std::vector<Irrep> irreps);

  const FiniteGroup& group() const { return *group_; }
  int size() const { return static_cast<int>(irreps_.size()); }
  const Irrep& operator[](int r) const { return irreps_[r]; }

  /// Worst-case residual of the Peter-Weyl orthogonality relation
  /// (1/|G|) sum_g sqrt(d_r d_r') conj(G^r_ij) G^r'_lk = delta terms.
  double peter_weyl_residual() const;

  /// Index of the irrep with the complex-conjugate character set.
  int dual(int r) const;

  /// Fusion product index for abelian groups (pointwise character product).
  /// Throws NonAbelian otherwise.
  int fuse_abelian(int r1, int r2) const;

  /// Unitary |G| x |G| matrix taking group-basis amplitudes to the
  /// matrix-element (Fourier) basis. Row (r,i,j) is laid out r-major with
  /// offset sum_{r'<r} d_{r'}^2 + i*d_r + j, and holds
  /// sqrt(d_r/|G|) conj(G^r_ij(g)) in column g.
  Mat fourier_matrix() const;

  /// Row offset of irrep r's block in fourier_matrix().
  int fourier_offset(int r) const;

private:
  const FiniteGroup* group_;
  std::vector<Irrep> irreps_;
  std::vector<int> offsets_;
};

/// Complete IrrepSet for a catalog group (Z_n or S3). Throws IncompleteIrreps
/// for non-catalog groups (import irreps from file instead).
IrrepSet irreps(const FiniteGroup& group);

/// Import a complete irrep list from a text file: per irrep a header line
/// "irrep <label> dim <d>" followed by |G| blocks of d rows of d complex
/// entries "a+bi", element order matching the group table.
IrrepSet irreps_from_file(const FiniteGroup& group, const std::string& path);

/// Write an IrrepSet in the import format (round-trip aid).
void write_irreps_file(const IrrepSet& set, const std::string& path);

/// Number of copies of the trivial irrep in the tensor product of the listed
/// irreps: N = (1/|G|) sum_g prod_i chi_{r_i}(g), rounded from a value that
/// must sit within 1e-9 of an integer (else NonIntegerMultiplicity).
int fusion_trivial_multiplicity(const std::vector<const Irrep*>& reps);
int fusion_trivial_multiplicity(const IrrepSet& set, const std::vector<int>& rep_indices);

/// Isotypic projector (d_r/|G|) sum_g conj(chi_r(g)) U(g) for a unitary
/// representation given as one matrix per group element. Validates that the
/// action is a representation, and that the result is a Hermitian idempotent.
Mat sector_projector_matrix(const FiniteGroup& group, const Irrep& rep,
                            const std::vector<Mat>& action);

/// Left-regular representation matrices (permutation matrices), mostly used
/// by tests and self-checks.
std::vector<Mat> regular_representation(const FiniteGroup& group);

} // namespace ge
