#include "mrsk/combinat.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "mrsk/error.hpp"

namespace mrsk {

namespace {

std::string join(const std::vector<int>& v, const char* sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << sep;
    os << v[i];
  }
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------- Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw Error("partition parts must be positive: (" + join(parts_, ",") + ")");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw Error("partition parts must weakly decrease: (" + join(parts_, ",") + ")");
  }
}

Partition Partition::from_padded(std::vector<int> parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Partition(std::move(parts));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
  std::vector<int> conj;
  if (parts_.empty()) return {};
  for (int k = 1; k <= parts_.front(); ++k) {
    int count = 0;
    for (int p : parts_) count += p >= k ? 1 : 0;
    conj.push_back(count);
  }
  return Partition(std::move(conj));
}

int Partition::rank_of_power(int k) const {
  int r = 0;
  for (int p : parts_) r += std::max(p - k, 0);
  return r;
}

bool Partition::contained_in(const Partition& other) const {
  if (length() > other.length()) return false;
  for (std::size_t i = 1; i <= length(); ++i)
    if (part(i) > other.part(i)) return false;
  return true;
}

std::string Partition::to_string() const { return "(" + join(parts_, ",") + ")"; }

// -------------------------------------------------------------- Composition

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 1) throw Error("composition parts must be positive: (" + join(parts_, ",") + ")");
}

int Composition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Composition Composition::from_content(const std::vector<int>& content) { return Composition(content); }

Composition Composition::ones(int d) { return Composition(std::vector<int>(static_cast<std::size_t>(d), 1)); }

std::string Composition::to_string() const { return "(" + join(parts_, ",") + ")"; }

// ------------------------------------------------------------------ Tableau

Tableau::Tableau(std::vector<Row> rows) : rows_(std::move(rows)) {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].empty()) throw ShapeError("tableau rows must be nonempty");
    if (r > 0 && rows_[r].size() > rows_[r - 1].size())
      throw ShapeError("tableau row lengths must weakly decrease");
    for (int e : rows_[r])
      if (e < 1) throw ShapeError("tableau entries must be positive");
  }
}

Tableau::Tableau(std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<Row> rs;
  for (const auto& r : rows) rs.emplace_back(r);
  *this = Tableau(std::move(rs));
}

int Tableau::size() const {
  int n = 0;
  for (const auto& r : rows_) n += static_cast<int>(r.size());
  return n;
}

int Tableau::max_entry() const {
  int m = 0;
  for (const auto& r : rows_)
    for (int e : r) m = std::max(m, e);
  return m;
}

Partition Tableau::shape() const {
  std::vector<int> lens;
  for (const auto& r : rows_) lens.push_back(static_cast<int>(r.size()));
  return Partition(std::move(lens));
}

ContentVector Tableau::content() const {
  ContentVector c(static_cast<std::size_t>(max_entry()), 0);
  for (const auto& r : rows_)
    for (int e : r) ++c[static_cast<std::size_t>(e - 1)];
  return c;
}

bool Tableau::is_semistandard() const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      if (c > 0 && rows_[r][c] <= rows_[r][c - 1]) return false;
      if (r > 0 && rows_[r][c] < rows_[r - 1][c]) return false;
    }
  }
  return true;
}

bool Tableau::is_standard() const {
  const auto c = content();
  if (std::any_of(c.begin(), c.end(), [](int m) { return m != 1; })) return false;
  // Distinct entries: weak column increase is strict, so the semistandard
  // check is exactly the standard one.
  return is_semistandard();
}

Tableau Tableau::restricted_to(int bound) const {
  std::vector<Row> out;
  for (const auto& r : rows_) {
    Row kept;
    for (int e : r)
      if (e <= bound) kept.push_back(e);
    if (kept.empty()) break;
    out.push_back(std::move(kept));
  }
  return Tableau(std::move(out));
}

std::vector<int> Tableau::reading_word() const {
  std::vector<int> word;
  for (const auto& r : rows_) word.insert(word.end(), r.begin(), r.end());
  return word;
}

std::string Tableau::to_text() const {
  std::ostringstream os;
  for (const auto& r : rows_) os << join(r, " ") << '\n';
  return os.str();
}

Partition shape(const Tableau& t) { return t.shape(); }
ContentVector content(const Tableau& t) { return t.content(); }
bool is_semistandard(const Tableau& t) { return t.is_semistandard(); }

// ------------------------------------------------------------ free helpers

bool interlaces(const Partition& lambda, const Partition& theta) {
  const std::size_t n = std::max(lambda.length(), theta.length()) + 1;
  for (std::size_t i = 1; i <= n; ++i) {
    if (lambda.part(i) < theta.part(i)) return false;
    if (theta.part(i) < lambda.part(i + 1)) return false;
  }
  return true;
}

int n_lambda(const Partition& lambda) {
  int n = 0;
  for (std::size_t i = 1; i <= lambda.length(); ++i) n += static_cast<int>(i - 1) * lambda.part(i);
  return n;
}

std::vector<Partition> enumerate_partitions(int d) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  if (d < 0) throw Error("negative size");
  rec(d, d);
  return out;
}

std::vector<Composition> enumerate_compositions(int d) {
  std::vector<Composition> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int remaining) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = 1; p <= remaining; ++p) {
      cur.push_back(p);
      rec(remaining - p);
      cur.pop_back();
    }
  };
  if (d < 0) throw Error("negative size");
  rec(d);
  return out;
}

std::vector<Partition> enumerate_interlacing(const Partition& lambda) {
  // theta_i ranges over [lambda_{i+1}, lambda_i]; each choice is automatically
  // weakly decreasing because lambda_{i+1} <= theta_i and theta_{i+1} <= lambda_{i+1}.
  std::vector<Partition> out;
  std::vector<int> cur;
  const std::size_t len = lambda.length();
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i > len) {
      out.push_back(Partition::from_padded(cur));
      return;
    }
    for (int t = lambda.part(i); t >= lambda.part(i + 1); --t) {
      cur.push_back(t);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

std::vector<Tableau> enumerate_semistandard(const Partition& shape, const Composition& content) {
  if (shape.size() != content.size())
    throw Error("shape " + shape.to_string() + " and content " + content.to_string() + " differ in size");

  // Boxes holding entry i form a vertical strip of size content[i-1]; recurse
  // over the chain of intermediate shapes.
  const std::size_t nrows = shape.length();
  std::vector<Tableau> out;
  std::vector<std::vector<int>> fill(nrows);
  std::vector<int> cur(nrows, 0);

  std::function<void(std::size_t)> step;
  std::function<void(std::size_t, std::size_t, int, int)> choose_rows =
      [&](std::size_t entry_idx, std::size_t row, int remaining, int value) {
        if (remaining == 0) {
          step(entry_idx + 1);
          return;
        }
        if (row >= nrows) return;
        // Rows are visited top-down, so cur[row - 1] already includes this
        // strip's box (if any) in the row above.
        const bool fits = cur[row] < shape.parts()[row] && (row == 0 || cur[row] + 1 <= cur[row - 1]);
        if (fits) {
          ++cur[row];
          fill[row].push_back(value);
          choose_rows(entry_idx, row + 1, remaining - 1, value);
          fill[row].pop_back();
          --cur[row];
        }
        choose_rows(entry_idx, row + 1, remaining, value);
      };
  step = [&](std::size_t entry_idx) {
    if (entry_idx == content.length()) {
      std::vector<Tableau::Row> rows;
      for (const auto& r : fill)
        if (!r.empty()) rows.push_back(r);
      out.emplace_back(std::move(rows));
      return;
    }
    choose_rows(entry_idx, 0, content[entry_idx], static_cast<int>(entry_idx) + 1);
  };
  step(0);

  std::sort(out.begin(), out.end(),
            [](const Tableau& a, const Tableau& b) { return a.reading_word() < b.reading_word(); });
  return out;
}

}  // namespace mrsk
