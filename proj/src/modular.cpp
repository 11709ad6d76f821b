#include "brauer/modular.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <limits>
#include <random>

#include "brauer/error.hpp"

namespace brauer::modular {

namespace {

constexpr std::array<std::uint32_t, 24> kPrimes = {
    2147483647u, 2147483629u, 2147483587u, 2147483579u, 2147483563u, 2147483549u,
    2147483543u, 2147483497u, 2147483489u, 2147483477u, 2147483423u, 2147483399u,
    2147483353u, 2147483323u, 2147483269u, 2147483249u, 2147483237u, 2147483179u,
    2147483171u, 2147483137u, 2147483123u, 2147483077u, 2147483069u, 2147483059u,
};

}  // namespace

std::span<const std::uint32_t> primes() { return kPrimes; }

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint32_t p) {
  if (a % p == 0) throw Error(Errc::invalid_argument, "zero has no inverse");
  return pow_mod(a, p - 2, p);
}

std::uint32_t reduce(std::int64_t v, std::uint32_t p) {
  const std::int64_t r = v % static_cast<std::int64_t>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

std::vector<std::uint32_t> berlekamp_massey(std::span<const std::uint32_t> s, std::uint32_t p) {
  std::vector<std::uint64_t> c{1};
  std::vector<std::uint64_t> b{1};
  std::size_t len = 0;
  std::size_t shift = 1;
  std::uint64_t last = 1;
  for (std::size_t n = 0; n < s.size(); ++n) {
    std::uint64_t d = s[n] % p;
    for (std::size_t i = 1; i <= len; ++i) d = (d + c[i] * s[n - i]) % p;
    if (d == 0) {
      ++shift;
      continue;
    }
    const std::uint64_t coef = d * inv_mod(last, p) % p;
    std::vector<std::uint64_t> previous = c;
    if (c.size() < b.size() + shift) c.resize(b.size() + shift, 0);
    for (std::size_t i = 0; i < b.size(); ++i) {
      c[i + shift] = (c[i + shift] + (p - coef) * b[i]) % p;
    }
    if (2 * len <= n) {
      len = n + 1 - len;
      b = std::move(previous);
      last = d;
      shift = 1;
    } else {
      ++shift;
    }
  }
  c.resize(len + 1, 0);
  return std::vector<std::uint32_t>(c.begin() + 1, c.end());
}

// ---------------------------------------------------------------------------

namespace {

std::optional<std::vector<std::uint32_t>> scale_to_ref(std::vector<std::uint32_t> x, std::size_t ref,
                                                       std::uint32_t p) {
  if (x[ref] == 0) return std::nullopt;
  const std::uint64_t inv = inv_mod(x[ref], p);
  for (auto& v : x) v = static_cast<std::uint32_t>(v * inv % p);
  return x;
}

std::optional<std::vector<std::uint32_t>> kernel_dense(const IntensityMatrix& m, std::uint32_t p,
                                                       std::size_t ref) {
  const std::size_t n = m.dimension();
  std::vector<std::uint32_t> a(n * n, 0);
  for (std::size_t c = 0; c < n; ++c) {
    for (const auto& e : m.column(c)) a[e.row * n + c] = reduce(e.value, p);
  }

  std::vector<std::size_t> pivot_col;
  std::vector<std::size_t> free_cols;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t r = rank;
    while (r < n && a[r * n + c] == 0) ++r;
    if (r == n) {
      free_cols.push_back(c);
      continue;
    }
    if (r != rank) {
      std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(r * n + c),
                       a.begin() + static_cast<std::ptrdiff_t>(r * n + n),
                       a.begin() + static_cast<std::ptrdiff_t>(rank * n + c));
    }
    std::uint32_t* pivot_row = &a[rank * n];
    const std::uint64_t inv = inv_mod(pivot_row[c], p);
    for (std::size_t j = c; j < n; ++j) pivot_row[j] = static_cast<std::uint32_t>(pivot_row[j] * inv % p);
    for (std::size_t i = rank + 1; i < n; ++i) {
      std::uint32_t* row = &a[i * n];
      if (row[c] == 0) continue;
      const std::uint64_t factor = p - row[c];
      for (std::size_t j = c; j < n; ++j) {
        row[j] = static_cast<std::uint32_t>((row[j] + factor * pivot_row[j]) % p);
      }
    }
    pivot_col.push_back(c);
    ++rank;
  }
  if (rank + 1 != n) return std::nullopt;

  std::vector<std::uint32_t> x(n, 0);
  x[free_cols.front()] = 1;
  for (std::size_t r = rank; r-- > 0;) {
    const std::size_t c = pivot_col[r];
    std::uint64_t s = 0;
    for (std::size_t j = c + 1; j < n; ++j) s = (s + static_cast<std::uint64_t>(a[r * n + j]) * x[j]) % p;
    x[c] = static_cast<std::uint32_t>((p - s) % p);
  }
  return scale_to_ref(std::move(x), ref, p);
}

// Principal minor of m without row and column `ref`, kept with its small
// signed integer entries so a matrix-vector product needs one reduction per
// row rather than one per nonzero.
class Minor {
 public:
  Minor(const IntensityMatrix& m, std::size_t ref) : size_(m.dimension() - 1) {
    std::vector<std::size_t> row_nnz(size_, 0);
    std::int64_t max_abs = 0;
    starts_.push_back(0);
    for (std::size_t c = 0; c < m.dimension(); ++c) {
      for (const auto& e : m.column(c)) {
        if (c == ref) {
          if (e.row != ref) rhs_.push_back({compact(e.row, ref), -e.value});
          continue;
        }
        if (e.row == ref) continue;
        const auto r = compact(e.row, ref);
        entries_.push_back({r, e.value});
        ++row_nnz[r];
        max_abs = std::max<std::int64_t>(max_abs, std::llabs(e.value));
      }
      if (c != ref) starts_.push_back(entries_.size());
    }
    const auto widest = row_nnz.empty() ? 0 : *std::max_element(row_nnz.begin(), row_nnz.end());
    // |sum| < widest * max_abs * 2^31 must stay below 2^63.
    lazy_ = max_abs == 0 ||
            static_cast<long double>(widest) * static_cast<long double>(max_abs) < static_cast<long double>(1ull << 31);
  }

  std::size_t size() const noexcept { return size_; }

  std::vector<std::uint32_t> rhs(std::uint32_t p) const {
    std::vector<std::uint32_t> b(size_, 0);
    for (const auto& [r, v] : rhs_) b[r] = reduce(v, p);
    return b;
  }

  void apply(std::span<const std::uint32_t> x, std::span<std::uint32_t> y, std::uint32_t p,
             std::vector<std::int64_t>& scratch) const {
    scratch.assign(size_, 0);
    for (std::size_t c = 0; c < size_; ++c) {
      const std::int64_t xc = x[c];
      if (xc == 0) continue;
      for (std::size_t k = starts_[c]; k < starts_[c + 1]; ++k) {
        auto& acc = scratch[entries_[k].row];
        acc += entries_[k].value * xc;
        if (!lazy_) acc %= static_cast<std::int64_t>(p);
      }
    }
    for (std::size_t r = 0; r < size_; ++r) y[r] = reduce(scratch[r], p);
  }

 private:
  struct Entry {
    std::uint32_t row;
    std::int64_t value;
  };

  static std::uint32_t compact(std::size_t index, std::size_t ref) {
    return static_cast<std::uint32_t>(index < ref ? index : index - 1);
  }

  std::size_t size_;
  std::vector<Entry> entries_;
  std::vector<std::size_t> starts_;
  std::vector<Entry> rhs_;
  bool lazy_ = true;
};

std::uint32_t dot(std::span<const std::uint32_t> u, std::span<const std::uint32_t> v, std::uint32_t p) {
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s = (s + static_cast<std::uint64_t>(u[i]) * v[i]) % p;
  return static_cast<std::uint32_t>(s);
}

std::optional<std::vector<std::uint32_t>> kernel_wiedemann(const IntensityMatrix& m, std::uint32_t p,
                                                           std::size_t ref, std::uint64_t seed) {
  const std::size_t n = m.dimension();
  if (n == 1) return std::vector<std::uint32_t>{1};
  const Minor minor(m, ref);
  const std::size_t size = minor.size();
  const std::vector<std::uint32_t> b = minor.rhs(p);
  std::vector<std::int64_t> scratch;
  std::vector<std::uint32_t> w(size);
  std::vector<std::uint32_t> next(size);

  std::mt19937_64 rng(seed ^ (static_cast<std::uint64_t>(p) << 17));
  std::uniform_int_distribution<std::uint32_t> coin(0, p - 1);
  constexpr int kAttempts = 3;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    std::vector<std::uint32_t> u(size);
    for (auto& v : u) v = coin(rng);

    std::vector<std::uint32_t> sequence;
    sequence.reserve(2 * size);
    w = b;
    for (std::size_t i = 0; i < 2 * size; ++i) {
      sequence.push_back(dot(u, w, p));
      if (i + 1 < 2 * size) {
        minor.apply(w, next, p, scratch);
        std::swap(w, next);
      }
    }
    const std::vector<std::uint32_t> c = berlekamp_massey(sequence, p);
    const std::size_t len = c.size();
    if (len == 0 || c[len - 1] == 0) continue;

    // Minimal polynomial f(z) = z^len + c_1 z^{len-1} + ... + c_len, so
    // A * sum_{i>=1} f_i A^{i-1} b = -f_0 b.
    std::vector<std::uint64_t> acc(size, 0);
    w = b;
    for (std::size_t i = 1; i <= len; ++i) {
      const std::uint64_t fi = i == len ? 1 : c[len - 1 - i];
      if (fi != 0) {
        for (std::size_t k = 0; k < size; ++k) acc[k] = (acc[k] + fi * w[k]) % p;
      }
      if (i < len) {
        minor.apply(w, next, p, scratch);
        std::swap(w, next);
      }
    }
    const std::uint64_t scale = (p - inv_mod(c[len - 1], p)) % p;
    std::vector<std::uint32_t> x(size);
    for (std::size_t k = 0; k < size; ++k) x[k] = static_cast<std::uint32_t>(acc[k] * scale % p);

    minor.apply(x, next, p, scratch);
    if (next != b) continue;

    std::vector<std::uint32_t> full(n);
    for (std::size_t k = 0, j = 0; k < n; ++k) full[k] = k == ref ? 1 : x[j++];
    return full;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<std::uint32_t>> kernel_mod(const IntensityMatrix& m, std::uint32_t p,
                                                     std::size_t ref, Backend backend,
                                                     std::uint64_t seed) {
  if (ref >= m.dimension()) throw Error(Errc::index_out_of_range, "reference coordinate out of range");
  return backend == Backend::dense ? kernel_dense(m, p, ref) : kernel_wiedemann(m, p, ref, seed);
}

// ---------------------------------------------------------------------------

void CrtVector::add(std::span<const std::uint32_t> residues, std::uint32_t p) {
  if (residues.size() != residues_.size()) throw Error(Errc::invalid_argument, "residue count mismatch");
  const std::uint64_t inv = inv_mod(mpz_fdiv_ui(modulus_.get_mpz_t(), p), p);
  for (std::size_t i = 0; i < residues_.size(); ++i) {
    const std::uint64_t current = mpz_fdiv_ui(residues_[i].get_mpz_t(), p);
    const std::uint64_t t = (residues[i] + p - current) % p * inv % p;
    residues_[i] += modulus_ * static_cast<unsigned long>(t);
  }
  modulus_ *= p;
}

std::optional<mpq_class> rational_reconstruct(const mpz_class& a, const mpz_class& m) {
  mpz_class bound;
  mpz_class half = m / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());

  mpz_class r0 = m;
  mpz_class r1 = a % m;
  if (r1 < 0) r1 += m;
  mpz_class t0 = 0;
  mpz_class t1 = 1;
  mpz_class q;
  mpz_class tmp;
  while (r1 > bound) {
    mpz_fdiv_q(q.get_mpz_t(), r0.get_mpz_t(), r1.get_mpz_t());
    tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (t1 == 0 || abs(t1) > bound) return std::nullopt;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return std::nullopt;
  mpq_class result(r1, t1);
  result.canonicalize();
  return result;
}

}  // namespace brauer::modular
