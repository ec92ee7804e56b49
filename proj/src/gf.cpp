#include "mrsk/gf.hpp"

#include <algorithm>
#include <sstream>

#include "mrsk/error.hpp"

namespace mrsk::gf {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

// --------------------------------------------------------------- PrimeField

PrimeField::PrimeField(Residue p) : p_(p) {
  if (p < 3 || p >= (1u << 31) || !is_prime(p))
    throw Error("field modulus must be an odd prime below 2^31, got " + std::to_string(p));
}

Residue PrimeField::inv(Residue a) const {
  if (a % p_ == 0) throw Error("inverse of zero");
  // Fermat: a^(p-2).
  Residue result = 1, base = a % p_;
  for (Residue e = p_ - 2; e; e >>= 1) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

Residue PrimeField::from_int(std::int64_t v) const {
  const auto m = static_cast<std::int64_t>(p_);
  return static_cast<Residue>(((v % m) + m) % m);
}

std::int64_t PrimeField::to_signed(Residue a) const {
  return a > p_ / 2 ? static_cast<std::int64_t>(a) - static_cast<std::int64_t>(p_) : static_cast<std::int64_t>(a);
}

Residue PrimeField::random(std::mt19937_64& rng) const {
  return std::uniform_int_distribution<Residue>(0, p_ - 1)(rng);
}

// ----------------------------------------------------------------- MatrixGF

MatrixGF::MatrixGF(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

MatrixGF MatrixGF::from_ints(PrimeField field, const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t ncols = rows.empty() ? 0 : rows.front().size();
  MatrixGF m(field, rows.size(), ncols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != ncols) throw Error("matrix rows must have equal length");
    for (std::size_t c = 0; c < ncols; ++c) m(r, c) = field.from_int(rows[r][c]);
  }
  return m;
}

MatrixGF MatrixGF::identity(PrimeField field, std::size_t n) {
  MatrixGF m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

MatrixGF MatrixGF::random(PrimeField field, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  MatrixGF m(field, rows, cols);
  for (auto& e : m.data_) e = field.random(rng);
  return m;
}

MatrixGF MatrixGF::random_invertible(PrimeField field, std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    auto m = random(field, n, n, rng);
    if (m.rank() == static_cast<int>(n)) return m;
  }
}

MatrixGF MatrixGF::jordan_nilpotent(PrimeField field, const Partition& lambda) {
  const auto d = static_cast<std::size_t>(lambda.size());
  MatrixGF m(field, d, d);
  std::size_t start = 0;
  for (int block : lambda.parts()) {
    for (std::size_t s = start; s + 1 < start + static_cast<std::size_t>(block); ++s) m(s, s + 1) = 1;
    start += static_cast<std::size_t>(block);
  }
  return m;
}

MatrixGF MatrixGF::from_columns(PrimeField field, std::size_t rows, const std::vector<Vector>& cols) {
  MatrixGF m(field, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw Error("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vector MatrixGF::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

MatrixGF MatrixGF::operator*(const MatrixGF& o) const {
  if (cols_ != o.rows_) throw Error("matrix product dimension mismatch");
  MatrixGF out(field_, rows_, o.cols_);
  const std::uint64_t p = field_.p();
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < o.cols_; ++c) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < cols_; ++k) acc = (acc + static_cast<std::uint64_t>((*this)(r, k)) * o(k, c)) % p;
      out(r, c) = static_cast<Residue>(acc);
    }
  return out;
}

Vector MatrixGF::operator*(const Vector& v) const {
  if (v.size() != cols_) throw Error("matrix-vector dimension mismatch");
  Vector out(rows_, 0);
  const std::uint64_t p = field_.p();
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < cols_; ++k) acc = (acc + static_cast<std::uint64_t>((*this)(r, k)) * v[k]) % p;
    out[r] = static_cast<Residue>(acc);
  }
  return out;
}

MatrixGF MatrixGF::operator+(const MatrixGF& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix sum dimension mismatch");
  MatrixGF out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.add(data_[i], o.data_[i]);
  return out;
}

MatrixGF MatrixGF::operator-(const MatrixGF& o) const { return *this + (-o); }

MatrixGF MatrixGF::operator-() const {
  MatrixGF out = *this;
  for (auto& e : out.data_) e = field_.neg(e);
  return out;
}

MatrixGF MatrixGF::pow(unsigned k) const {
  if (rows_ != cols_) throw Error("power of a non-square matrix");
  MatrixGF out = identity(field_, rows_);
  for (unsigned i = 0; i < k; ++i) out = out * *this;
  return out;
}

MatrixGF MatrixGF::transpose() const {
  MatrixGF out(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

bool MatrixGF::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Residue e) { return e == 0; });
}

int MatrixGF::rank() const { return rref(*this).rank; }

std::vector<std::vector<std::int64_t>> MatrixGF::to_signed_ints() const {
  std::vector<std::vector<std::int64_t>> out(rows_, std::vector<std::int64_t>(cols_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r][c] = field_.to_signed((*this)(r, c));
  return out;
}

RrefResult rref(const MatrixGF& m) {
  RrefResult res{m, 0, {}};
  auto& a = res.matrix;
  const auto& f = m.field();
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = row;
    while (piv < a.rows() && a(piv, col) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(piv, c), a(row, c));
    const Residue scale = f.inv(a(row, col));
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) = f.mul(a(row, c), scale);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == 0) continue;
      const Residue factor = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) a(r, c) = f.sub(a(r, c), f.mul(factor, a(row, c)));
    }
    res.pivots.push_back(col);
    ++row;
  }
  res.rank = static_cast<int>(row);
  return res;
}

MatrixGF outer(const PrimeField& field, const Vector& vec, const Vector& cov) {
  MatrixGF m(field, vec.size(), cov.size());
  for (std::size_t r = 0; r < vec.size(); ++r)
    for (std::size_t c = 0; c < cov.size(); ++c) m(r, c) = field.mul(vec[r], cov[c]);
  return m;
}

// --------------------------------------------------------------- SubspaceGF

SubspaceGF::SubspaceGF(PrimeField field, std::size_t ambient) : field_(field), ambient_(ambient) {}

SubspaceGF SubspaceGF::span(PrimeField field, std::size_t ambient, const std::vector<Vector>& vectors) {
  SubspaceGF s(field, ambient);
  if (vectors.empty()) return s;
  MatrixGF m(field, vectors.size(), ambient);
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    if (vectors[r].size() != ambient) throw Error("vector length does not match the ambient dimension");
    for (std::size_t c = 0; c < ambient; ++c) m(r, c) = vectors[r][c] % field.p();
  }
  auto red = rref(m);
  for (int r = 0; r < red.rank; ++r) {
    const auto row = red.matrix.row(static_cast<std::size_t>(r));
    s.basis_.emplace_back(row.begin(), row.end());
  }
  s.pivots_ = std::move(red.pivots);
  return s;
}

SubspaceGF SubspaceGF::whole(PrimeField field, std::size_t ambient) {
  std::vector<Vector> vs;
  for (std::size_t i = 0; i < ambient; ++i) {
    Vector e(ambient, 0);
    e[i] = 1;
    vs.push_back(std::move(e));
  }
  return span(field, ambient, vs);
}

Vector SubspaceGF::reduce(const Vector& v) const {
  if (v.size() != ambient_) throw Error("vector length does not match the ambient dimension");
  Vector out = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Residue factor = out[pivots_[i]];
    if (factor == 0) continue;
    for (std::size_t c = 0; c < ambient_; ++c) out[c] = field_.sub(out[c], field_.mul(factor, basis_[i][c]));
  }
  return out;
}

bool SubspaceGF::contains(const Vector& v) const {
  const auto r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](Residue e) { return e == 0; });
}

bool SubspaceGF::contains(const SubspaceGF& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const Vector& b) { return contains(b); });
}

Vector SubspaceGF::coordinates(const Vector& v) const {
  if (!contains(v)) throw Error("coordinates of a vector outside the subspace");
  Vector c;
  for (std::size_t p : pivots_) c.push_back(v[p]);
  return c;
}

SubspaceGF SubspaceGF::annihilator() const {
  if (basis_.empty()) return whole(field_, ambient_);
  MatrixGF m(field_, basis_.size(), ambient_);
  for (std::size_t r = 0; r < basis_.size(); ++r)
    for (std::size_t c = 0; c < ambient_; ++c) m(r, c) = basis_[r][c];
  return nullspace(m);
}

Vector SubspaceGF::random_element(std::mt19937_64& rng) const {
  Vector v(ambient_, 0);
  for (const auto& b : basis_) {
    const Residue coef = field_.random(rng);
    for (std::size_t c = 0; c < ambient_; ++c) v[c] = field_.add(v[c], field_.mul(coef, b[c]));
  }
  return v;
}

namespace {

void check_compatible(const SubspaceGF& a, const SubspaceGF& b) {
  if (a.ambient() != b.ambient()) throw Error("subspaces live in different ambient spaces");
  if (!(a.field() == b.field())) throw Error("subspaces live over different fields");
}

}  // namespace

SubspaceGF sum(const SubspaceGF& a, const SubspaceGF& b) {
  check_compatible(a, b);
  auto vs = a.basis();
  vs.insert(vs.end(), b.basis().begin(), b.basis().end());
  return SubspaceGF::span(a.field(), a.ambient(), vs);
}

SubspaceGF intersect(const SubspaceGF& a, const SubspaceGF& b) {
  check_compatible(a, b);
  return sum(a.annihilator(), b.annihilator()).annihilator();
}

bool contains(const SubspaceGF& a, const Vector& v) { return a.contains(v); }

SubspaceGF nullspace(const MatrixGF& m) {
  const auto red = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : red.pivots) is_pivot[p] = true;
  const auto& f = m.field();
  std::vector<Vector> vs;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector z(m.cols(), 0);
    z[free] = 1;
    for (std::size_t i = 0; i < red.pivots.size(); ++i) z[red.pivots[i]] = f.neg(red.matrix(i, free));
    vs.push_back(std::move(z));
  }
  return SubspaceGF::span(f, m.cols(), vs);
}

SubspaceGF image(const MatrixGF& m, const SubspaceGF& s) {
  std::vector<Vector> vs;
  for (const auto& b : s.basis()) vs.push_back(m * b);
  return SubspaceGF::span(m.field(), m.rows(), vs);
}

SubspaceGF preimage(const MatrixGF& m, const SubspaceGF& s) {
  if (s.ambient() != m.rows()) throw Error("preimage: dimension mismatch");
  const auto ann = s.annihilator();
  MatrixGF a(m.field(), ann.basis().size(), m.rows());
  for (std::size_t r = 0; r < ann.basis().size(); ++r)
    for (std::size_t c = 0; c < m.rows(); ++c) a(r, c) = ann.basis()[r][c];
  if (ann.basis().empty()) return SubspaceGF::whole(m.field(), m.cols());
  return nullspace(a * m);
}

SubspaceGF cyclic_span(const MatrixGF& m, const Vector& v) {
  SubspaceGF s(m.field(), m.rows());
  std::vector<Vector> vs;
  Vector cur = v;
  while (!s.contains(cur)) {
    vs.push_back(cur);
    s = SubspaceGF::span(m.field(), m.rows(), vs);
    cur = m * cur;
  }
  return s;
}

bool is_nilpotent(const MatrixGF& x) {
  if (x.rows() != x.cols()) return false;
  return x.pow(static_cast<unsigned>(x.rows())).is_zero();
}

Partition jordan_type(const MatrixGF& x) {
  if (!is_nilpotent(x)) throw NotNilpotentError("jordan_type: matrix is not nilpotent");
  // parts >= k  <=>  rank(x^{k-1}) - rank(x^k).
  std::vector<int> at_least;
  MatrixGF power = MatrixGF::identity(x.field(), x.rows());
  int prev_rank = static_cast<int>(x.rows());
  while (prev_rank > 0) {
    power = power * x;
    const int r = power.rank();
    at_least.push_back(prev_rank - r);
    prev_rank = r;
  }
  return Partition(at_least).conjugate();
}

MatrixGF restrict(const MatrixGF& x, const SubspaceGF& s) {
  const auto& basis = s.basis();
  MatrixGF out(x.field(), basis.size(), basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c) {
    const auto img = x * basis[c];
    if (!s.contains(img)) throw NotInvariantError("restrict: subspace is not invariant");
    const auto coords = s.coordinates(img);
    for (std::size_t r = 0; r < basis.size(); ++r) out(r, c) = coords[r];
  }
  return out;
}

MatrixGF quotient_action(const MatrixGF& x, const SubspaceGF& s) {
  for (const auto& b : s.basis())
    if (!s.contains(x * b)) throw NotInvariantError("quotient_action: subspace is not invariant");
  std::vector<bool> is_pivot(s.ambient(), false);
  for (std::size_t p : s.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < s.ambient(); ++i)
    if (!is_pivot[i]) free.push_back(i);

  MatrixGF out(x.field(), free.size(), free.size());
  for (std::size_t c = 0; c < free.size(); ++c) {
    Vector e(s.ambient(), 0);
    e[free[c]] = 1;
    const auto img = s.reduce(x * e);
    for (std::size_t r = 0; r < free.size(); ++r) out(r, c) = img[free[r]];
  }
  return out;
}

std::string dump(const MatrixGF& m) {
  std::ostringstream os;
  os << "{\"p\": " << m.field().p() << ", \"rows\": [";
  const auto ints = m.to_signed_ints();
  for (std::size_t r = 0; r < ints.size(); ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < ints[r].size(); ++c) os << (c ? ", " : "") << ints[r][c];
    os << "]";
  }
  os << "]}";
  return os.str();
}

}  // namespace mrsk::gf
