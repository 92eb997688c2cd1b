#include "gk/oracle/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace gk::oracle {

Mat Mat::identity(int d) {
  Mat m;
  m.dim = uint8_t(d);
  for (int i = 0; i < d; ++i) m.at(i, i) = 1;
  return m;
}

bool Mat::is_identity() const {
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

bool Mat::operator==(const Mat& o) const {
  if (dim != o.dim) return false;
  for (int i = 0; i < dim * dim; ++i)
    if (e[i] != o.e[i]) return false;
  return true;
}

std::string Mat::str(const GF&) const {
  std::ostringstream os;
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) os << int(at(i, j)) << (j + 1 < dim ? " " : "");
    os << (i + 1 < dim ? "; " : "");
  }
  return os.str();
}

Mat mul(const GF& F, const Mat& a, const Mat& b) {
  Mat c;
  c.dim = a.dim;
  const int d = a.dim;
  if (F.f == 1) {
    // prime field: integer dot products with one reduction
    const int p = F.p;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        unsigned acc = 0;
        for (int k = 0; k < d; ++k) acc += unsigned(a.at(i, k)) * b.at(k, j);
        c.at(i, j) = uint8_t(acc % p);
      }
    return c;
  }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      uint8_t acc = 0;
      for (int k = 0; k < d; ++k)
        acc = F.add(acc, F.mul(a.at(i, k), b.at(k, j)));
      c.at(i, j) = acc;
    }
  return c;
}

Mat transpose(const Mat& a) {
  Mat t;
  t.dim = a.dim;
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) t.at(j, i) = a.at(i, j);
  return t;
}

Mat inverse(const GF& F, const Mat& a) {
  const int d = a.dim;
  Mat left = a, right = Mat::identity(d);
  for (int col = 0; col < d; ++col) {
    int pivot = -1;
    for (int r = col; r < d; ++r)
      if (left.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw std::invalid_argument("inverse: singular matrix");
    if (pivot != col) {
      for (int j = 0; j < d; ++j) {
        std::swap(left.e[pivot * d + j], left.e[col * d + j]);
        std::swap(right.e[pivot * d + j], right.e[col * d + j]);
      }
    }
    uint8_t s = F.inv(left.at(col, col));
    for (int j = 0; j < d; ++j) {
      left.at(col, j) = F.mul(left.at(col, j), s);
      right.at(col, j) = F.mul(right.at(col, j), s);
    }
    for (int r = 0; r < d; ++r) {
      if (r == col || left.at(r, col) == 0) continue;
      uint8_t c = left.at(r, col);
      for (int j = 0; j < d; ++j) {
        left.at(r, j) = F.sub(left.at(r, j), F.mul(c, left.at(col, j)));
        right.at(r, j) = F.sub(right.at(r, j), F.mul(c, right.at(col, j)));
      }
    }
  }
  return right;
}

Mat mat_pow(const GF& F, Mat a, uint64_t k) {
  Mat r = Mat::identity(a.dim);
  while (k) {
    if (k & 1) r = mul(F, r, a);
    a = mul(F, a, a);
    k >>= 1;
  }
  return r;
}

uint8_t scalar_of(const Mat& m) {
  uint8_t c = m.at(0, 0);
  if (c == 0) return 0;
  for (int i = 0; i < m.dim; ++i)
    for (int j = 0; j < m.dim; ++j)
      if (m.at(i, j) != (i == j ? c : 0)) return 0;
  return c;
}

Mat projective_normalize(const GF& F, const Mat& m) {
  for (int i = 0; i < m.dim * m.dim; ++i) {
    if (m.e[i] != 0) {
      if (m.e[i] == 1) return m;
      uint8_t s = F.inv(m.e[i]);
      Mat r = m;
      for (int j = 0; j < m.dim * m.dim; ++j) r.e[j] = F.mul(m.e[j], s);
      return r;
    }
  }
  throw std::invalid_argument("projective_normalize: zero matrix");
}

u128 pack(const GF& F, const Mat& m) {
  u128 key = 0;
  for (int i = m.dim * m.dim - 1; i >= 0; --i)
    key = key * unsigned(F.q) + m.e[i];
  return key;
}

Mat unpack(const GF& F, int dim, u128 key) {
  Mat m;
  m.dim = uint8_t(dim);
  for (int i = 0; i < dim * dim; ++i) {
    m.e[i] = uint8_t(key % unsigned(F.q));
    key /= unsigned(F.q);
  }
  return m;
}

unsigned element_order(const GF& F, const Mat& m, unsigned cap) {
  Mat x = m;
  for (unsigned k = 1; k <= cap; ++k) {
    if (x.is_identity()) return k;
    x = mul(F, x, m);
  }
  throw std::runtime_error("element_order: cap exceeded");
}

unsigned coset_order(const GF& F, const Mat& m, unsigned cap) {
  Mat x = m;
  for (unsigned k = 1; k <= cap; ++k) {
    if (scalar_of(x) != 0) return k;
    x = mul(F, x, m);
  }
  throw std::runtime_error("coset_order: cap exceeded");
}

// ---- permutations ------------------------------------------------------------

Perm Perm::identity(int n) {
  Perm p;
  p.n = uint8_t(n);
  for (int i = 0; i < n; ++i) p.img[i] = uint8_t(i);
  return p;
}

bool Perm::is_identity() const {
  for (int i = 0; i < n; ++i)
    if (img[i] != i) return false;
  return true;
}

std::string Perm::cycles() const {
  std::ostringstream os;
  std::array<bool, 16> seen{};
  for (int i = 0; i < n; ++i) {
    if (seen[i] || img[i] == i) continue;
    os << "(";
    int j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      os << (first ? "" : ",") << j + 1;
      first = false;
      j = img[j];
    }
    os << ")";
  }
  return os.str();
}

Perm mul(const Perm& a, const Perm& b) {
  Perm c;
  c.n = a.n;
  for (int i = 0; i < a.n; ++i) c.img[i] = a.img[b.img[i]];
  return c;
}

Perm inverse(const Perm& a) {
  Perm c;
  c.n = a.n;
  for (int i = 0; i < a.n; ++i) c.img[a.img[i]] = uint8_t(i);
  return c;
}

u128 pack(const Perm& p) {
  u128 key = 0;
  for (int i = p.n - 1; i >= 0; --i) key = key * 16 + p.img[i];
  return key;
}

unsigned element_order(const Perm& p) {
  Perm x = p;
  unsigned k = 1;
  while (!x.is_identity()) {
    x = mul(x, p);
    ++k;
  }
  return k;
}

}  // namespace gk::oracle
