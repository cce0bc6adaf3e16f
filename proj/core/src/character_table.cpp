#include "arbocoh/character_table.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_complex.hpp>

#include "arbocoh/error.hpp"

namespace arbocoh {

namespace {

using HighComplex = boost::multiprecision::cpp_complex_50;
using HighMatrix = std::vector<std::vector<HighComplex>>;
using HighVector = std::vector<HighComplex>;

// Solves A y = b by Gaussian elimination with partial pivoting. Returns false when a
// pivot vanishes, which for inverse iteration means the shift is already exact.
bool solve_high(HighMatrix a, HighVector b, HighVector& y) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (abs(a[r][col]) > abs(a[piv][col])) piv = r;
    }
    if (abs(a[piv][col]) == 0) return false;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const HighComplex f = a[r][col] / a[col][col];
      if (f == HighComplex(0)) continue;
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  y.assign(n, HighComplex(0));
  for (std::size_t i = n; i-- > 0;) {
    HighComplex s = b[i];
    for (std::size_t c = i + 1; c < n; ++c) s -= a[i][c] * y[c];
    y[i] = s / a[i][i];
  }
  return true;
}

std::size_t argmax_abs(const HighVector& v) {
  std::size_t k = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (abs(v[i]) > abs(v[k])) k = i;
  }
  return k;
}

double snap(double x) {
  const double r = std::round(x);
  return std::abs(x - r) < 1e-9 ? r + 0.0 : x;
}

// Lexicographic "greater" on character rows with a tolerance, real part first.
bool row_greater(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i].real() - b[i].real()) > 1e-9) return a[i].real() > b[i].real();
    if (std::abs(a[i].imag() - b[i].imag()) > 1e-9) return a[i].imag() > b[i].imag();
  }
  return false;
}

struct ClassData {
  std::vector<std::size_t> sizes;
  // structure[r][s][t] = #{x in C_r : x^{-1} g_t in C_s}
  std::vector<std::vector<std::vector<long>>> structure;
};

ClassData class_algebra(const CharacterTable& t) {
  const std::size_t r = t.classes.size();
  ClassData data;
  data.structure.assign(r, std::vector<std::vector<long>>(r, std::vector<long>(r, 0)));
  for (const auto& cls : t.classes) data.sizes.push_back(cls.size());
  std::vector<Permutation> inv_by_element;
  for (const auto& x : t.group.elements()) inv_by_element.push_back(inverse(x));
  for (std::size_t tc = 0; tc < r; ++tc) {
    const Permutation& g = t.group.elements()[t.classes[tc].front()];
    for (std::size_t rc = 0; rc < r; ++rc) {
      for (std::size_t xi : t.classes[rc]) {
        const std::size_t y = t.group.index_of(compose(inv_by_element[xi], g));
        ++data.structure[rc][t.class_of[y]][tc];
      }
    }
  }
  return data;
}

bool attempt(CharacterTable& t, const ClassData& data, std::mt19937_64& rng, double tolerance) {
  const std::size_t r = t.classes.size();
  const double order = static_cast<double>(t.group.order());
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  std::vector<double> c(r);
  for (auto& x : c) x = coeff(rng);

  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r));
  HighMatrix mh(r, HighVector(r, HighComplex(0)));
  for (std::size_t s = 0; s < r; ++s) {
    for (std::size_t tc = 0; tc < r; ++tc) {
      double v = 0;
      HighComplex vh(0);
      for (std::size_t rc = 0; rc < r; ++rc) {
        v += c[rc] * static_cast<double>(data.structure[rc][s][tc]);
        vh += HighComplex(c[rc]) * HighComplex(data.structure[rc][s][tc]);
      }
      m(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(tc)) = v;
      mh[s][tc] = vh;
    }
  }

  Eigen::EigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success) return false;
  const Eigen::VectorXcd lambda = solver.eigenvalues();
  const Eigen::MatrixXcd vectors = solver.eigenvectors();
  for (Eigen::Index a = 0; a < lambda.size(); ++a) {
    for (Eigen::Index b = a + 1; b < lambda.size(); ++b) {
      if (std::abs(lambda[a] - lambda[b]) < 1e-6) return false;
    }
  }

  std::vector<std::vector<Complex>> rows;
  std::vector<int> degrees;
  for (Eigen::Index k = 0; k < lambda.size(); ++k) {
    HighVector w(r);
    for (std::size_t i = 0; i < r; ++i) {
      const Complex z = vectors(static_cast<Eigen::Index>(i), k);
      w[i] = HighComplex(z.real(), z.imag());
    }
    HighComplex mu(lambda[k].real(), lambda[k].imag());
    for (int iter = 0; iter < 6; ++iter) {
      HighMatrix shifted = mh;
      for (std::size_t i = 0; i < r; ++i) shifted[i][i] -= mu;
      HighVector y;
      if (!solve_high(shifted, w, y)) break;
      const HighComplex scale = y[argmax_abs(y)];
      for (auto& yi : y) yi /= scale;
      w = std::move(y);
      const std::size_t kk = argmax_abs(w);
      HighComplex mw(0);
      for (std::size_t j = 0; j < r; ++j) mw += mh[kk][j] * w[j];
      mu = mw / w[kk];
    }
    if (abs(w[0]) < 1e-20) return false;
    const HighComplex w0 = w[0];
    for (auto& wi : w) wi /= w0;

    boost::multiprecision::cpp_bin_float_50 norm = 0;
    for (std::size_t i = 0; i < r; ++i) norm += boost::multiprecision::norm(w[i]) / data.sizes[i];
    const auto degree_high = sqrt(boost::multiprecision::cpp_bin_float_50(order) / norm);
    const double degree = static_cast<double>(degree_high);
    if (std::abs(degree - std::round(degree)) > 1e-6) return false;
    degrees.push_back(static_cast<int>(std::lround(degree)));

    std::vector<Complex> row(r);
    for (std::size_t i = 0; i < r; ++i) {
      const HighComplex chi = w[i] * HighComplex(degree_high) / HighComplex(data.sizes[i]);
      row[i] = Complex(snap(static_cast<double>(chi.real())), snap(static_cast<double>(chi.imag())));
    }
    rows.push_back(std::move(row));
  }

  std::vector<std::size_t> perm(rows.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (degrees[a] != degrees[b]) return degrees[a] < degrees[b];
    return row_greater(rows[a], rows[b]);
  });
  t.characters.clear();
  t.degrees.clear();
  for (std::size_t i : perm) {
    t.characters.push_back(rows[i]);
    t.degrees.push_back(degrees[i]);
  }

  long total = 0;
  for (int d : t.degrees) total += static_cast<long>(d) * d;
  if (total != static_cast<long>(t.group.order())) return false;
  return row_orthogonality_residual(t) < tolerance && column_orthogonality_residual(t) < tolerance;
}

}  // namespace

Complex CharacterTable::value(std::size_t row, const Permutation& p) const {
  const std::size_t idx = group.index_of(p);
  if (idx >= group.order()) throw Error(ErrorKind::NotASubgroup, "permutation is not in the group");
  return value(row, idx);
}

CharacterTable character_table(const PermGroup& g, const CharacterTableOptions& options) {
  CharacterTable t;
  t.group = g;
  t.classes = conjugacy_classes(g);
  t.class_of.assign(g.order(), 0);
  for (std::size_t c = 0; c < t.classes.size(); ++c) {
    for (std::size_t e : t.classes[c]) t.class_of[e] = c;
  }
  const ClassData data = class_algebra(t);
  std::mt19937_64 rng(options.seed);
  for (int tries = 0; tries <= options.max_retries; ++tries) {
    if (attempt(t, data, rng, options.tolerance)) return t;
  }
  throw Error(ErrorKind::NumericalDegeneracy,
              "class algebra eigenvectors did not separate after " + std::to_string(options.max_retries) + " retries");
}

double row_orthogonality_residual(const CharacterTable& t) {
  const double order = static_cast<double>(t.group.order());
  double worst = 0;
  for (std::size_t i = 0; i < t.rows(); ++i) {
    for (std::size_t j = 0; j < t.rows(); ++j) {
      Complex s = 0;
      for (std::size_t c = 0; c < t.classes.size(); ++c) {
        s += static_cast<double>(t.classes[c].size()) * t.characters[i][c] * std::conj(t.characters[j][c]);
      }
      worst = std::max(worst, std::abs(s / order - (i == j ? 1.0 : 0.0)));
    }
  }
  return worst;
}

double column_orthogonality_residual(const CharacterTable& t) {
  const double order = static_cast<double>(t.group.order());
  double worst = 0;
  for (std::size_t a = 0; a < t.classes.size(); ++a) {
    for (std::size_t b = 0; b < t.classes.size(); ++b) {
      Complex s = 0;
      for (std::size_t i = 0; i < t.rows(); ++i) s += t.characters[i][a] * std::conj(t.characters[i][b]);
      const double expected = a == b ? order / static_cast<double>(t.classes[a].size()) : 0.0;
      worst = std::max(worst, std::abs(s - expected));
    }
  }
  return worst;
}

int invariant_dim(const CharacterTable& t, std::size_t row, const PermGroup& h) {
  if (row >= t.rows()) throw Error(ErrorKind::InvalidArgument, "character row out of range");
  if (h.degree() != t.group.degree()) throw Error(ErrorKind::NotASubgroup, "degree mismatch");
  Complex sum = 0;
  for (const auto& p : h.elements()) sum += t.value(row, p);
  const Complex avg = sum / static_cast<double>(h.order());
  const double rounded = std::round(avg.real());
  if (std::abs(avg.imag()) > 1e-6 || std::abs(avg.real() - rounded) > 1e-6 || rounded < 0) {
    throw Error(ErrorKind::NonIntegralDimension, "invariant dimension is not a nonnegative integer");
  }
  return static_cast<int>(rounded);
}

std::string character_fingerprint(const CharacterTable& t, std::size_t row) {
  std::string out;
  char buf[64];
  for (std::size_t c = 0; c < t.classes.size(); ++c) {
    const Complex v = t.characters.at(row)[c];
    if (c) out += ',';
    if (std::abs(v.imag()) < 1e-9) {
      std::snprintf(buf, sizeof buf, "%.6g", v.real() + 0.0);
    } else {
      std::snprintf(buf, sizeof buf, "%.6g%+.6gi", v.real() + 0.0, v.imag());
    }
    out += buf;
  }
  return out;
}

}  // namespace arbocoh
