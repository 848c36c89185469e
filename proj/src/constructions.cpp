// Copyright 2026 The isoframe Authors
// SPDX-License-Identifier: Apache-2.0

#include "isoframe/constructions.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>

#include "isoframe/core.hpp"
#include "isoframe/vector_io.hpp"

namespace isoframe {

namespace {

constexpr double kPi = std::numbers::pi;

cplx root_of_unity(long k, int n) {
  const long r = ((k % n) + n) % n;
  if (r == 0) return {1.0, 0.0};
  if (2 * r == n) return {-1.0, 0.0};
  if (4 * r == n) return {0.0, 1.0};
  if (4 * r == 3L * n) return {0.0, -1.0};
  const double a = 2.0 * kPi * static_cast<double>(r) / n;
  return {std::cos(a), std::sin(a)};
}

int int_arg(const std::vector<std::string>& spec, size_t i, const char* what) {
  if (spec.size() <= i) throw std::invalid_argument(std::string("missing ") + what);
  char* end = nullptr;
  const long v = std::strtol(spec[i].c_str(), &end, 10);
  if (end == spec[i].c_str() || *end != '\0') {
    throw std::invalid_argument(std::string("bad ") + what + ": " + spec[i]);
  }
  return static_cast<int>(v);
}

// Returns (p, n) with d = p^n, or (0, 0).
std::pair<int, int> prime_power(int d) {
  for (int p = 2; p <= d; ++p) {
    if (d % p != 0) continue;
    if (!galois::is_prime(p)) return {0, 0};
    int n = 0;
    int rest = d;
    while (rest % p == 0) {
      rest /= p;
      ++n;
    }
    return rest == 1 ? std::make_pair(p, n) : std::make_pair(0, 0);
  }
  return {0, 0};
}

VectorSet from_columns(const MatC& m) {
  VectorSet v;
  v.d = static_cast<int>(m.rows());
  v.vectors = m;
  return v;
}

}  // namespace

WeylOperators weyl_operators(int d) {
  WeylOperators w{MatC::Zero(d, d), MatC::Zero(d, d)};
  for (int j = 0; j < d; ++j) {
    w.x((j + 1) % d, j) = 1.0;
    w.z(j, j) = root_of_unity(j, d);
  }
  return w;
}

MatC fourier_matrix(int k) {
  if (k < 2) throw std::invalid_argument("fourier_matrix: k >= 2 required");
  MatC f(k, k);
  for (int s = 0; s < k; ++s) {
    for (int t = 0; t < k; ++t) f(s, t) = root_of_unity(static_cast<long>(s) * t, k);
  }
  return f;
}

HermitianUnitary etf_fourier_unitary(int k) {
  if (k < 2) throw std::invalid_argument("etf_fourier_unitary: k >= 2 required");
  const int n = k * k;
  HermitianUnitary u;
  u.n = n;
  u.d = k * (k - 1) / 2;
  u.entries.resize(n, n);
  for (int i2 = 0; i2 < k; ++i2) {
    for (int i1 = 0; i1 < k; ++i1) {
      for (int j2 = 0; j2 < k; ++j2) {
        for (int j1 = 0; j1 < k; ++j1) {
          u.entries(i1 + k * i2, j1 + k * j2) =
              root_of_unity(static_cast<long>(i1) * j2 - static_cast<long>(j1) * i2, k) /
              static_cast<double>(k);
        }
      }
    }
  }
  const double diag = 1.0 - 2.0 * u.d / n;
  if (unitarity_residual(u.entries) > 1e-12 || std::abs(u.entries(0, 0).real() - diag) > 1e-12) {
    throw std::logic_error("etf_fourier_unitary: scaling check failed");
  }
  u.support = support_pattern(u.entries, Tolerances{}.zero);
  return u;
}

std::vector<MatC> mub_prime(int p) {
  if (!galois::is_prime(p)) throw std::invalid_argument("mub_prime: p must be prime");
  std::vector<MatC> bases{MatC::Identity(p, p)};
  const double norm = 1.0 / std::sqrt(static_cast<double>(p));
  if (p == 2) {
    MatC h(2, 2);
    h << 1, 1, 1, -1;
    MatC y(2, 2);
    y << cplx(1, 0), cplx(1, 0), cplx(0, 1), cplx(0, -1);
    bases.push_back(norm * h);
    bases.push_back(norm * y);
    return bases;
  }
  for (int b = 0; b < p; ++b) {
    MatC m(p, p);
    for (int c = 0; c < p; ++c) {
      for (int x = 0; x < p; ++x) {
        m(x, c) = norm * root_of_unity(static_cast<long>(b) * x * x + static_cast<long>(c) * x, p);
      }
    }
    bases.push_back(m);
  }
  return bases;
}

galois::Poly default_mub_polynomial(int p, int n) {
  if (p == 2 && n == 2) return {1, 1, 1};
  if (p == 2 && n == 3) return {1, 1, 0, 1};
  if (p == 2 && n == 4) return {1, 1, 0, 0, 1};
  if (p == 3 && n == 2) return {1, 0, 1};
  throw std::invalid_argument("mub_prime_power: unsupported dimension");
}

galois::Poly alternate_mub_polynomial(int p, int n) {
  if (p == 2 && n == 3) return {1, 0, 1, 1};
  if (p == 2 && n == 4) return {1, 0, 0, 1, 1};
  if (p == 3 && n == 2) return {2, 1, 1};
  throw std::invalid_argument("no alternate polynomial for this dimension");
}

std::vector<MatC> mub_prime_power(int p, int n) {
  return mub_prime_power(p, default_mub_polynomial(p, n));
}

std::vector<MatC> mub_prime_power(int p, const galois::Poly& modulus) {
  const int n = static_cast<int>(modulus.size()) - 1;
  if (!galois::is_prime(p) || n < 1) throw std::invalid_argument("mub_prime_power: bad field");
  int d = 1;
  for (int i = 0; i < n; ++i) d *= p;
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  std::vector<MatC> bases{MatC::Identity(d, d)};
  if (p == 2) {
    // Galois ring GR(4, n): v_{a,b}(x) = i^{tr((a + 2b) x)}, a, b, x Teichmuller.
    const galois::Poly lift = galois::hensel_lift(modulus);
    const std::vector<galois::Poly> t = galois::teichmuller_set(lift);
    for (const auto& a : t) {
      MatC m(d, d);
      for (int bi = 0; bi < d; ++bi) {
        galois::Poly ab(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) ab[i] = (a[i] + 2 * t[bi][i]) % 4;
        for (int xi = 0; xi < d; ++xi) {
          const int tr = galois::trace(galois::mul_mod(ab, t[xi], lift, 4), lift, 4);
          m(xi, bi) = norm * root_of_unity(tr, 4);
        }
      }
      bases.push_back(m);
    }
    return bases;
  }
  // Odd characteristic: v_{b,c}(x) = w_p^{tr(b x^2 + c x)}.
  const std::vector<galois::Poly> els = galois::field_elements(p, n);
  for (const auto& b : els) {
    MatC m(d, d);
    for (int ci = 0; ci < d; ++ci) {
      for (int xi = 0; xi < d; ++xi) {
        const auto& x = els[xi];
        const galois::Poly x2 = galois::mul_mod(x, x, modulus, p);
        galois::Poly v = galois::mul_mod(b, x2, modulus, p);
        const galois::Poly cx = galois::mul_mod(els[ci], x, modulus, p);
        for (int i = 0; i < n; ++i) v[i] = (v[i] + cx[i]) % p;
        m(xi, ci) = norm * root_of_unity(galois::trace(v, modulus, p), p);
      }
    }
    bases.push_back(m);
  }
  return bases;
}

std::vector<MatC> mub_bases(int d) {
  const auto [p, n] = prime_power(d);
  if (p == 0) throw std::invalid_argument("no maximal MUB construction for d=" + std::to_string(d));
  return n == 1 ? mub_prime(p) : mub_prime_power(p, n);
}

VectorSet vectors_from_bases(const std::vector<MatC>& bases) {
  if (bases.empty()) throw std::invalid_argument("vectors_from_bases: no bases");
  const int d = static_cast<int>(bases.front().rows());
  VectorSet v;
  v.d = d;
  v.vectors.resize(d, d * static_cast<int>(bases.size()));
  for (size_t b = 0; b < bases.size(); ++b) {
    v.vectors.middleCols(static_cast<int>(b) * d, d) = bases[b];
    for (int j = 0; j < d; ++j) v.labels.push_back("B" + std::to_string(b) + "." + std::to_string(j));
  }
  return v;
}

VectorSet sic_weyl_heisenberg(const VecC& fiducial) {
  const int d = static_cast<int>(fiducial.size());
  const WeylOperators w = weyl_operators(d);
  VectorSet v;
  v.d = d;
  v.vectors.resize(d, d * d);
  MatC xs = MatC::Identity(d, d);
  for (int s = 0; s < d; ++s) {
    MatC zt = MatC::Identity(d, d);
    for (int t = 0; t < d; ++t) {
      v.vectors.col(s * d + t) = xs * zt * fiducial;
      v.labels.push_back(std::to_string(s) + "," + std::to_string(t));
      zt = w.z * zt;
    }
    xs = w.x * xs;
  }
  return v;
}

std::string fiducial_path(int d) {
  const char* env = std::getenv("ISOFRAME_DATA_DIR");
  const std::string root = env != nullptr ? env : ISOFRAME_DATA_DIR;
  return root + "/fiducials/sic_d" + std::to_string(d) + ".json";
}

VecC sic_fiducial(int d, double* declared_accuracy) {
  VecC f(d);
  double accuracy = 0.0;
  if (d == 2) {
    const double c = std::sqrt((1.0 + 1.0 / std::sqrt(3.0)) / 2.0);
    const double s = std::sqrt((1.0 - 1.0 / std::sqrt(3.0)) / 2.0);
    f << c, s * std::polar(1.0, kPi / 4.0);
  } else if (d == 3) {
    f << 1.0, -1.0, 0.0;
    f /= std::sqrt(2.0);
  } else {
    const VectorSet loaded = load_vectors(fiducial_path(d), &accuracy);
    if (loaded.d != d || loaded.size() != 1) throw ValidationError("fiducial file has wrong shape");
    f = loaded.vectors.col(0);
  }
  if (declared_accuracy != nullptr) *declared_accuracy = accuracy;
  return f;
}

VecC hoggar_fiducial() {
  VecC f = VecC::Ones(8);
  f(0) = cplx(-1.0, 2.0);
  return f / std::sqrt(12.0);
}

VectorSet hoggar_lines() {
  const VecC f = hoggar_fiducial();
  VectorSet v;
  v.d = 8;
  v.vectors.resize(8, 64);
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      for (int x = 0; x < 8; ++x) {
        const int sign = (__builtin_popcount(b & x) % 2 == 0) ? 1 : -1;
        v.vectors(x ^ a, a * 8 + b) = static_cast<double>(sign) * f(x);
      }
      v.labels.push_back("X" + std::to_string(a) + "Z" + std::to_string(b));
    }
  }
  return v;
}

VectorSet ks_set(const std::string& name) {
  MatC m;
  if (name == "yu-oh-13") {
    const int rows[13][3] = {{1, 0, 0}, {0, 1, 0},  {0, 0, 1},  {0, 1, 1},  {0, 1, -1},
                             {1, 0, 1}, {1, 0, -1}, {1, 1, 0},  {1, -1, 0}, {1, 1, 1},
                             {-1, 1, 1}, {1, -1, 1}, {1, 1, -1}};
    m.resize(3, 13);
    for (int j = 0; j < 13; ++j) {
      for (int i = 0; i < 3; ++i) m(i, j) = rows[j][i];
    }
  } else if (name == "cabello-18") {
    const int rows[18][4] = {{0, 0, 0, 1},   {0, 0, 1, 0},  {0, 1, 0, 0},   {1, 1, 0, 0},
                             {1, -1, 0, 0},  {1, 0, 1, 0},  {1, 0, -1, 0},  {1, 0, 0, 1},
                             {1, 0, 0, -1},  {0, 1, -1, 0}, {0, 0, 1, 1},   {0, 1, 0, -1},
                             {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, 1, 1},  {1, 1, -1, 1},
                             {1, 1, 1, -1},  {-1, 1, 1, 1}};
    m.resize(4, 18);
    for (int j = 0; j < 18; ++j) {
      for (int i = 0; i < 4; ++i) m(i, j) = rows[j][i];
    }
  } else if (name == "lisonek-21") {
    // Entries are exponents k of exp(2 pi i k / 12) / 2; -1 marks a zero.
    const int rows[15][6] = {{-1, -1, 0, 0, 0, 0},   {-1, 0, -1, 6, 10, 2}, {-1, 0, 6, -1, 2, 10},
                             {-1, 0, 10, 2, -1, 6},  {-1, 0, 2, 10, 6, -1}, {0, -1, -1, 6, 2, 10},
                             {0, -1, 6, -1, 10, 2},  {0, -1, 2, 10, -1, 6}, {0, -1, 10, 2, 6, -1},
                             {0, 0, -1, -1, 6, 6},   {0, 4, -1, 2, -1, 2},  {0, 8, -1, 10, 10, -1},
                             {0, 8, 10, -1, -1, 10}, {0, 4, 2, -1, 2, -1},  {0, 0, 6, 6, -1, -1}};
    m = MatC::Zero(6, 21);
    m.leftCols(6) = MatC::Identity(6, 6);
    for (int j = 0; j < 15; ++j) {
      for (int i = 0; i < 6; ++i) {
        if (rows[j][i] >= 0) m(i, 6 + j) = 0.5 * root_of_unity(rows[j][i], 12);
      }
    }
  } else {
    throw std::invalid_argument("unknown KS set: " + name);
  }
  for (int j = 0; j < m.cols(); ++j) m.col(j).normalize();
  return from_columns(m);
}

int count_orthogonal_pairs(const VectorSet& v, double eps) {
  const MatC g = v.vectors.adjoint() * v.vectors;
  int z = 0;
  for (int i = 0; i < g.rows(); ++i) {
    for (int j = i + 1; j < g.cols(); ++j) {
      if (std::abs(g(i, j)) <= eps) ++z;
    }
  }
  return z;
}

SymmetryMatrix symmetry_etf(int d, int n) {
  if (n <= d) throw std::invalid_argument("symmetry_etf: N > d required");
  SymmetryMatrix s;
  s.kind = SymmetryMatrix::Kind::Etf;
  const double off = static_cast<double>(n - d) / (static_cast<double>(d) * (n - 1));
  s.entries = MatR::Constant(n, n, off);
  s.entries.diagonal().setOnes();
  return s;
}

SymmetryMatrix symmetry_mub(int d, int m) {
  if (m < 2) throw std::invalid_argument("symmetry_mub: m >= 2 required");
  SymmetryMatrix s;
  s.kind = SymmetryMatrix::Kind::Mub;
  const int n = d * m;
  s.entries = MatR::Constant(n, n, 1.0 / d);
  for (int b = 0; b < m; ++b) s.entries.block(b * d, b * d, d, d).setIdentity();
  return s;
}

NamedStructure make_structure(const std::vector<std::string>& spec) {
  if (spec.empty()) throw std::invalid_argument("empty structure spec");
  const std::string& kind = spec[0];
  NamedStructure out;
  Tolerances tol;
  if (kind == "mub") {
    const int d = int_arg(spec, 1, "dimension");
    std::vector<MatC> bases;
    if (d == 6 && spec.size() > 2 && int_arg(spec, 2, "basis count") == 2) {
      bases = {MatC::Identity(6, 6), fourier_matrix(6) / std::sqrt(6.0)};
    } else {
      bases = mub_bases(d);
    }
    const int m = spec.size() > 2 ? int_arg(spec, 2, "basis count") : static_cast<int>(bases.size());
    if (m < 2 || m > static_cast<int>(bases.size())) throw std::invalid_argument("bad basis count");
    bases.resize(static_cast<size_t>(m));
    out.name = "mub(" + std::to_string(d) + "," + std::to_string(m) + ")";
    out.vectors = vectors_from_bases(bases);
    out.symmetry = symmetry_mub(d, m);
    out.long_running = d >= 16;
  } else if (kind == "sic") {
    const int d = int_arg(spec, 1, "dimension");
    double acc = 0.0;
    out.vectors = sic_weyl_heisenberg(sic_fiducial(d, &acc));
    out.declared_accuracy = acc;
    out.name = "sic(" + std::to_string(d) + ")";
    out.symmetry = symmetry_etf(d, d * d);
    out.long_running = d >= 13;
  } else if (kind == "hoggar") {
    out.name = "hoggar";
    out.vectors = hoggar_lines();
    out.symmetry = symmetry_etf(8, 64);
  } else if (kind == "etf-fourier") {
    const int k = int_arg(spec, 1, "k");
    out.name = "etf-fourier(" + std::to_string(k) + ")";
    out.unitary = etf_fourier_unitary(k);
    out.long_running = k >= 9;
    return out;
  } else if (kind == "ks") {
    if (spec.size() < 2) throw std::invalid_argument("missing KS set name");
    out.name = spec[1];
    out.vectors = ks_set(spec[1]);
  } else {
    throw std::invalid_argument("unknown structure kind: " + kind);
  }
  const GramMatrix g = gram_from_vectors(*out.vectors);
  out.unitary = unitary_from_gram(g, tol);
  return out;
}

std::vector<std::string> structure_registry() {
  return {"mub D [M]      maximal (or first M) mutually unbiased bases, D prime or 4, 8, 9, 16",
          "mub 6 2        identity and normalized Fourier matrix in dimension 6",
          "sic D          Weyl-Heisenberg SIC-POVM, D = 2..12, 16",
          "hoggar         Hoggar lines (64 vectors, d = 8)",
          "etf-fourier K  ETF(K(K-1)/2, K^2) from F_K (x) F_K",
          "ks NAME        Kochen-Specker set: yu-oh-13, cabello-18, lisonek-21"};
}

}  // namespace isoframe
