#include "ge/group.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <numeric>
#include <set>
#include <sstream>

#include "ge/tolerances.hpp"

namespace ge {

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> mul, std::string name)
    : mul_(std::move(mul)), name_(std::move(name)) {
  order_ = static_cast<int>(mul_.size());
  if (order_ == 0) throw NotAGroup("empty multiplication table");
  for (const auto& row : mul_) {
    if (static_cast<int>(row.size()) != order_)
      throw NotAGroup("table is not square");
    for (int v : row)
      if (v < 0 || v >= order_) throw NotAGroup("entry out of range");
  }

  // Latin square: each row and column is a permutation.
  for (int g = 0; g < order_; ++g) {
    std::vector<bool> seen_row(order_, false), seen_col(order_, false);
    for (int h = 0; h < order_; ++h) {
      if (seen_row[mul_[g][h]])
        throw NotAGroup("row " + std::to_string(g) + " is not a permutation");
      seen_row[mul_[g][h]] = true;
      if (seen_col[mul_[h][g]])
        throw NotAGroup("column " + std::to_string(g) + " is not a permutation");
      seen_col[mul_[h][g]] = true;
    }
  }

  // Two-sided identity at index 0.
  for (int g = 0; g < order_; ++g)
    if (mul_[0][g] != g || mul_[g][0] != g)
      throw NotAGroup("element 0 is not a two-sided identity");

  // Exhaustive associativity.
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b)
      for (int c = 0; c < order_; ++c)
        if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]])
          throw NotAGroup("non-associative triple (" + std::to_string(a) + "," +
                          std::to_string(b) + "," + std::to_string(c) + ")");

  // Two-sided inverses.
  inv_.assign(order_, -1);
  for (int g = 0; g < order_; ++g) {
    for (int h = 0; h < order_; ++h) {
      if (mul_[g][h] == 0) {
        if (mul_[h][g] != 0)
          throw NotAGroup("inverse of " + std::to_string(g) + " is one-sided");
        inv_[g] = h;
        break;
      }
    }
    if (inv_[g] < 0) throw NotAGroup("no inverse for " + std::to_string(g));
  }

  abelian_ = true;
  for (int g = 0; g < order_ && abelian_; ++g)
    for (int h = 0; h < g; ++h)
      if (mul_[g][h] != mul_[h][g]) {
        abelian_ = false;
        break;
      }

  // Conjugacy classes by brute force.
  class_of_.assign(order_, -1);
  for (int g = 0; g < order_; ++g) {
    if (class_of_[g] >= 0) continue;
    std::set<int> cls;
    for (int h = 0; h < order_; ++h)
      cls.insert(mul_[mul_[h][g]][inv_[h]]);
    int id = static_cast<int>(classes_.size());
    classes_.emplace_back(cls.begin(), cls.end());
    for (int e : cls) class_of_[e] = id;
  }
}

FiniteGroup cyclic_group(int n) {
  if (n < 1) throw NotAGroup("cyclic group order must be positive");
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mul[a][b] = (a + b) % n;
  FiniteGroup g(std::move(mul), "Z" + std::to_string(n));
  g.catalog_ = FiniteGroup::Catalog::Cyclic;
  g.cyclic_n_ = n;
  return g;
}

namespace {

std::vector<std::array<int, 3>> s3_permutations() {
  std::array<int, 3> p{0, 1, 2};
  std::vector<std::array<int, 3>> perms;
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return perms;  // lexicographic, identity first
}

} // namespace

FiniteGroup symmetric_group_s3() {
  auto perms = s3_permutations();
  auto index_of = [&](const std::array<int, 3>& p) {
    for (int i = 0; i < 6; ++i)
      if (perms[i] == p) return i;
    return -1;
  };
  std::vector<std::vector<int>> mul(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
      mul[a][b] = index_of(c);
    }
  FiniteGroup g(std::move(mul), "S3");
  g.catalog_ = FiniteGroup::Catalog::S3;
  return g;
}

FiniteGroup group_from_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open group table file " + path);
  std::string word;
  in >> word;
  if (word != "order") throw ConfigError("group table file must start with 'order n'");
  int n = 0;
  in >> n;
  if (!in || n < 1) throw ConfigError("bad group order in " + path);
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!(in >> mul[a][b]))
        throw ConfigError("truncated group table in " + path);
    }
  return FiniteGroup(std::move(mul), "table:" + path);
}

FiniteGroup build_group(const std::string& spec) {
  if (spec == "z2") return cyclic_group(2);
  if (spec == "z3") return cyclic_group(3);
  if (spec == "s3" || spec == "S3") return symmetric_group_s3();
  if (spec.rfind("zn:", 0) == 0) {
    int n = 0;
    try {
      n = std::stoi(spec.substr(3));
    } catch (const std::exception&) {
      throw ConfigError("bad cyclic order in group spec '" + spec + "'");
    }
    if (n < 2) throw ConfigError("catalog cyclic groups require n >= 2");
    return cyclic_group(n);
  }
  if (spec.rfind("table:", 0) == 0) return group_from_table_file(spec.substr(6));
  throw ConfigError("unknown group spec '" + spec + "'");
}

Irrep::Irrep(const FiniteGroup& group, std::vector<Mat> matrices, std::string label)
    : label_(std::move(label)), matrices_(std::move(matrices)) {
  const int n = group.order();
  if (static_cast<int>(matrices_.size()) != n)
    throw NotARepresentation("irrep '" + label_ + "' needs one matrix per element");
  dim_ = static_cast<int>(matrices_[0].rows());
  if (dim_ < 1) throw NotARepresentation("irrep '" + label_ + "' has empty matrices");
  for (const Mat& m : matrices_) {
    if (m.rows() != dim_ || m.cols() != dim_)
      throw NotARepresentation("irrep '" + label_ + "' has inconsistent dimensions");
    double u = (m.adjoint() * m - Mat::Identity(dim_, dim_)).cwiseAbs().maxCoeff();
    if (u > tol::kUnitarity)
      throw NotUnitary("irrep '" + label_ + "' matrix fails unitarity by " +
                       std::to_string(u));
  }
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      double d = (matrices_[g] * matrices_[h] - matrices_[group.mul(g, h)])
                     .cwiseAbs()
                     .maxCoeff();
      if (d > tol::kHomomorphism)
        throw NotARepresentation("irrep '" + label_ +
                                 "' violates homomorphism by " + std::to_string(d));
    }
  characters_.resize(n);
  for (int g = 0; g < n; ++g) characters_[g] = matrices_[g].trace();
  for (int g = 0; g < n; ++g)
    for (int h : group.conjugacy_classes()[group.class_of(g)])
      if (std::abs(characters_[g] - characters_[h]) > tol::kCharacterClass)
        throw NotARepresentation("irrep '" + label_ +
                                 "' character is not a class function");
}

IrrepSet::IrrepSet(const FiniteGroup& group, std::vector<Irrep> irreps)
    : group_(&group), irreps_(std::move(irreps)) {
  long sum = 0;
  offsets_.resize(irreps_.size());
  for (size_t r = 0; r < irreps_.size(); ++r) {
    offsets_[r] = static_cast<int>(sum);
    sum += static_cast<long>(irreps_[r].dim()) * irreps_[r].dim();
  }
  if (sum != group.order())
    throw IncompleteIrreps("sum of squared dimensions is " + std::to_string(sum) +
                           ", expected " + std::to_string(group.order()));
  double res = peter_weyl_residual();
  if (res > tol::kPeterWeyl)
    throw IncompleteIrreps("Peter-Weyl residual " + std::to_string(res) +
                           " (inequivalent-irreps check failed)");
}

double IrrepSet::peter_weyl_residual() const {
  const int n = group_->order();
  double worst = 0.0;
  for (int r = 0; r < size(); ++r)
    for (int s = 0; s < size(); ++s) {
      const Irrep& R = irreps_[r];
      const Irrep& S = irreps_[s];
      double pref = std::sqrt(double(R.dim()) * S.dim()) / n;
      for (int i = 0; i < R.dim(); ++i)
        for (int j = 0; j < R.dim(); ++j)
          for (int l = 0; l < S.dim(); ++l)
            for (int k = 0; k < S.dim(); ++k) {
              cplx acc = 0.0;
              for (int g = 0; g < n; ++g)
                acc += std::conj(R.matrix(g)(i, j)) * S.matrix(g)(l, k);
              acc *= pref;
              double expect = (r == s && i == l && j == k) ? 1.0 : 0.0;
              worst = std::max(worst, std::abs(acc - expect));
            }
    }
  return worst;
}

int IrrepSet::dual(int r) const {
  const int n = group_->order();
  for (int s = 0; s < size(); ++s) {
    double d = 0.0;
    for (int g = 0; g < n; ++g)
      d = std::max(d, std::abs(std::conj(irreps_[r].character(g)) -
                               irreps_[s].character(g)));
    if (d <= tol::kCharacterClass) return s;
  }
  throw IncompleteIrreps("no dual found for irrep " + irreps_[r].label());
}

int IrrepSet::fuse_abelian(int r1, int r2) const {
  if (!group_->is_abelian())
    throw NonAbelian("character fusion product requires an abelian group");
  const int n = group_->order();
  for (int s = 0; s < size(); ++s) {
    double d = 0.0;
    for (int g = 0; g < n; ++g)
      d = std::max(d, std::abs(irreps_[r1].character(g) * irreps_[r2].character(g) -
                               irreps_[s].character(g)));
    if (d <= 1e-9) return s;
  }
  throw IncompleteIrreps("fusion product not found in irrep set");
}

Mat IrrepSet::fourier_matrix() const {
  const int n = group_->order();
  Mat f(n, n);
  for (int r = 0; r < size(); ++r) {
    const Irrep& R = irreps_[r];
    double pref = std::sqrt(double(R.dim()) / n);
    for (int i = 0; i < R.dim(); ++i)
      for (int j = 0; j < R.dim(); ++j)
        for (int g = 0; g < n; ++g)
          f(offsets_[r] + i * R.dim() + j, g) = pref * std::conj(R.matrix(g)(i, j));
  }
  return f;
}

int IrrepSet::fourier_offset(int r) const { return offsets_[r]; }

namespace {

IrrepSet cyclic_irreps(const FiniteGroup& group) {
  const int n = group.order();
  std::vector<Irrep> list;
  for (int k = 0; k < n; ++k) {
    std::vector<Mat> mats(n, Mat(1, 1));
    for (int j = 0; j < n; ++j) {
      double ang = 2.0 * std::numbers::pi * k * j / n;
      mats[j](0, 0) = cplx(std::cos(ang), std::sin(ang));
    }
    std::string label = (k == 0) ? "triv"
                        : (n == 2) ? "sign"
                                   : "chi" + std::to_string(k);
    list.emplace_back(group, std::move(mats), label);
  }
  return IrrepSet(group, std::move(list));
}

IrrepSet s3_irreps(const FiniteGroup& group) {
  auto perms = s3_permutations();
  std::vector<Irrep> list;

  std::vector<Mat> triv(6, Mat::Identity(1, 1));
  list.emplace_back(group, std::move(triv), "triv");

  std::vector<Mat> sign(6, Mat(1, 1));
  for (int g = 0; g < 6; ++g) {
    int s = 1;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (perms[g][i] > perms[g][j]) s = -s;
    sign[g](0, 0) = s;
  }
  list.emplace_back(group, std::move(sign), "sign");

  // Standard 2-dim irrep: restriction of the permutation action on R^3 to the
  // plane orthogonal to (1,1,1), in an orthonormal basis.
  Eigen::Matrix<double, 3, 2> basis;
  basis << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(6.0),
      -1.0 / std::sqrt(2.0), 1.0 / std::sqrt(6.0),
      0.0, -2.0 / std::sqrt(6.0);
  std::vector<Mat> std2(6, Mat(2, 2));
  for (int g = 0; g < 6; ++g) {
    Eigen::Matrix3d p = Eigen::Matrix3d::Zero();
    for (int i = 0; i < 3; ++i) p(perms[g][i], i) = 1.0;
    Eigen::Matrix2d m = basis.transpose() * p * basis;
    std2[g] = m.cast<cplx>();
  }
  list.emplace_back(group, std::move(std2), "std");

  return IrrepSet(group, std::move(list));
}

} // namespace

IrrepSet irreps(const FiniteGroup& group) {
  switch (group.catalog()) {
    case FiniteGroup::Catalog::Cyclic:
      return cyclic_irreps(group);
    case FiniteGroup::Catalog::S3:
      return s3_irreps(group);
    case FiniteGroup::Catalog::None:
      break;
  }
  throw IncompleteIrreps(
      "no catalog irreps for group '" + group.name() +
      "'; import matrices with irreps_from_file instead");
}

namespace {

cplx parse_complex(const std::string& tok) {
  // Accepts "a", "a+bi", "a-bi".
  if (tok.empty()) throw ConfigError("empty complex literal");
  size_t ipos = tok.find('i');
  if (ipos == std::string::npos) {
    size_t used = 0;
    double a = std::stod(tok, &used);
    if (used != tok.size()) throw ConfigError("bad complex literal '" + tok + "'");
    return cplx(a, 0.0);
  }
  if (ipos != tok.size() - 1)
    throw ConfigError("bad complex literal '" + tok + "'");
  std::string body = tok.substr(0, ipos);
  // Split at the last +/- that is not an exponent sign.
  for (size_t k = body.size(); k-- > 1;) {
    char c = body[k];
    if ((c == '+' || c == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      double a = std::stod(body.substr(0, k));
      std::string bs = body.substr(k);
      double b = (bs == "+") ? 1.0 : (bs == "-") ? -1.0 : std::stod(bs);
      return cplx(a, b);
    }
  }
  // Pure imaginary.
  double b = (body == "" || body == "+") ? 1.0 : (body == "-") ? -1.0 : std::stod(body);
  return cplx(0.0, b);
}

} // namespace

IrrepSet irreps_from_file(const FiniteGroup& group, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open irrep file " + path);
  std::vector<Irrep> list;
  std::string word;
  while (in >> word) {
    if (word != "irrep")
      throw ConfigError("expected 'irrep' header in " + path + ", got '" + word + "'");
    std::string label, dimword;
    int d = 0;
    if (!(in >> label >> dimword >> d) || dimword != "dim" || d < 1)
      throw ConfigError("malformed irrep header in " + path);
    std::vector<Mat> mats(group.order(), Mat(d, d));
    for (int g = 0; g < group.order(); ++g)
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          std::string tok;
          if (!(in >> tok)) throw ConfigError("truncated irrep data in " + path);
          mats[g](i, j) = parse_complex(tok);
        }
    list.emplace_back(group, std::move(mats), label);
  }
  if (list.empty()) throw IncompleteIrreps("no irreps in " + path);
  return IrrepSet(group, std::move(list));
}

void write_irreps_file(const IrrepSet& set, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write irrep file " + path);
  out.precision(17);
  for (int r = 0; r < set.size(); ++r) {
    const Irrep& R = set[r];
    out << "irrep " << R.label() << " dim " << R.dim() << "\n";
    for (int g = 0; g < set.group().order(); ++g) {
      for (int i = 0; i < R.dim(); ++i) {
        for (int j = 0; j < R.dim(); ++j) {
          cplx z = R.matrix(g)(i, j);
          char buf[80];
          std::snprintf(buf, sizeof(buf), "%.17g%+.17gi", z.real(), z.imag());
          out << buf << (j + 1 < R.dim() ? " " : "\n");
        }
      }
    }
  }
}

int fusion_trivial_multiplicity(const std::vector<const Irrep*>& reps) {
  if (reps.empty())
    throw NotARepresentation("fusion multiplicity needs at least one irrep");
  const auto n = reps[0]->characters().size();
  cplx acc = 0.0;
  for (size_t g = 0; g < n; ++g) {
    cplx prod = 1.0;
    for (const Irrep* r : reps) {
      if (r->characters().size() != n)
        throw NotARepresentation("fusion multiplicity needs irreps of one group");
      prod *= r->character(static_cast<int>(g));
    }
    acc += prod;
  }
  acc /= static_cast<double>(n);
  double rounded = std::round(acc.real());
  if (std::abs(acc - cplx(rounded, 0.0)) > tol::kMultiplicityRounding)
    throw NonIntegerMultiplicity("character sum " + std::to_string(acc.real()) +
                                 "+" + std::to_string(acc.imag()) +
                                 "i is not an integer");
  if (rounded < -0.5)
    throw NonIntegerMultiplicity("negative multiplicity from corrupt irreps");
  return static_cast<int>(rounded);
}

int fusion_trivial_multiplicity(const IrrepSet& set, const std::vector<int>& rep_indices) {
  std::vector<const Irrep*> reps;
  reps.reserve(rep_indices.size());
  for (int r : rep_indices) reps.push_back(&set[r]);
  return fusion_trivial_multiplicity(reps);
}

Mat sector_projector_matrix(const FiniteGroup& group, const Irrep& rep,
                            const std::vector<Mat>& action) {
  const int n = group.order();
  if (static_cast<int>(action.size()) != n ||
      static_cast<int>(rep.characters().size()) != n)
    throw NotARepresentation("action needs one matrix per group element");
  const auto d = action[0].rows();
  for (const Mat& m : action) {
    if (m.rows() != d || m.cols() != d)
      throw NotARepresentation("action has inconsistent dimensions");
    double u = (m.adjoint() * m - Mat::Identity(d, d)).cwiseAbs().maxCoeff();
    if (u > 1e-10) throw NotARepresentation("action is not unitary");
  }
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      double dev = (action[g] * action[h] - action[group.mul(g, h)])
                       .cwiseAbs()
                       .maxCoeff();
      if (dev > tol::kHomomorphism)
        throw NotARepresentation("action violates the homomorphism property by " +
                                 std::to_string(dev));
    }
  Mat p = Mat::Zero(d, d);
  for (int g = 0; g < n; ++g) p += std::conj(rep.character(g)) * action[g];
  p *= double(rep.dim()) / n;
  double herm = (p - p.adjoint()).cwiseAbs().maxCoeff();
  double idem = (p * p - p).cwiseAbs().maxCoeff();
  if (herm > tol::kProjectorIdempotent || idem > tol::kProjectorIdempotent)
    throw NotARepresentation("isotypic projector residual " +
                             std::to_string(std::max(herm, idem)));
  return p;
}

std::vector<Mat> regular_representation(const FiniteGroup& group) {
  const int n = group.order();
  std::vector<Mat> mats(n, Mat::Zero(n, n));
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) mats[g](group.mul(g, h), h) = 1.0;
  return mats;
}

} // namespace ge
