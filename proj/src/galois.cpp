// Copyright 2026 The isoframe Authors
// SPDX-License-Identifier: Apache-2.0

#include "isoframe/galois.hpp"

#include <stdexcept>

namespace isoframe::galois {

namespace {

int mod(int a, int q) { return ((a % q) + q) % q; }

Poly mul(const Poly& a, const Poly& b) {
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

}  // namespace

Poly mul_mod(const Poly& a, const Poly& b, const Poly& modulus, int q) {
  const int n = static_cast<int>(modulus.size()) - 1;
  if (n < 1 || modulus.back() != 1) throw std::invalid_argument("modulus must be monic");
  Poly r(static_cast<size_t>(2 * n), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < b.size(); ++j) {
      r[i + j] = mod(r[i + j] + a[i] * b[j], q);
    }
  }
  for (int k = static_cast<int>(r.size()) - 1; k >= n; --k) {
    const int c = r[static_cast<size_t>(k)];
    if (c == 0) continue;
    for (int i = 0; i <= n; ++i) {
      auto& slot = r[static_cast<size_t>(k - n + i)];
      slot = mod(slot - c * modulus[static_cast<size_t>(i)], q);
    }
  }
  r.resize(static_cast<size_t>(n));
  return r;
}

int trace(const Poly& y, const Poly& modulus, int q) {
  const int n = static_cast<int>(modulus.size()) - 1;
  int t = 0;
  for (int i = 0; i < n; ++i) {
    Poly e(static_cast<size_t>(n), 0);
    e[static_cast<size_t>(i)] = 1;
    t += mul_mod(y, e, modulus, q)[static_cast<size_t>(i)];
  }
  return mod(t, q);
}

Poly hensel_lift(const Poly& f) {
  const int n = static_cast<int>(f.size()) - 1;
  Poly even(f.size(), 0);
  Poly odd(f.size(), 0);
  for (int i = 0; i <= n; ++i) {
    (i % 2 == 0 ? even : odd)[static_cast<size_t>(i)] = f[static_cast<size_t>(i)];
  }
  const Poly ee = mul(even, even);
  const Poly oo = mul(odd, odd);
  Poly h(static_cast<size_t>(n + 1));
  for (int i = 0; i <= n; ++i) {
    h[static_cast<size_t>(i)] = mod(ee[static_cast<size_t>(2 * i)] - oo[static_cast<size_t>(2 * i)], 4);
  }
  if (h.back() != 1) {
    for (int& c : h) c = mod(-c, 4);
  }
  return h;
}

std::vector<Poly> teichmuller_set(const Poly& lift) {
  const int n = static_cast<int>(lift.size()) - 1;
  const int d = 1 << n;
  std::vector<Poly> out;
  out.emplace_back(static_cast<size_t>(n), 0);
  Poly xi(static_cast<size_t>(n), 0);
  if (n == 1) {
    xi[0] = mod(-lift[0], 4);
  } else {
    xi[1] = 1;
  }
  Poly p(static_cast<size_t>(n), 0);
  p[0] = 1;
  for (int k = 0; k < d - 1; ++k) {
    out.push_back(p);
    p = mul_mod(p, xi, lift, 4);
  }
  return out;
}

std::vector<Poly> field_elements(int p, int n) {
  std::vector<Poly> out;
  int total = 1;
  for (int i = 0; i < n; ++i) total *= p;
  for (int idx = 0; idx < total; ++idx) {
    Poly e(static_cast<size_t>(n));
    int rest = idx;
    for (int i = n - 1; i >= 0; --i) {
      e[static_cast<size_t>(i)] = rest % p;
      rest /= p;
    }
    out.push_back(e);
  }
  return out;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int k = 2; k * k <= p; ++k) {
    if (p % k == 0) return false;
  }
  return true;
}

}  // namespace isoframe::galois
