#include "landscape/tables.hpp"

#include <algorithm>
#include <numeric>

namespace landscape {

ContingencyTable::ContingencyTable(int rows, int cols)
    : rows_(rows), cols_(cols), k_(static_cast<size_t>(rows) * cols, 0) {
  if (rows < 1 || cols < 1) throw InvalidInput("table: dimensions must be positive");
}

ContingencyTable ContingencyTable::from_rows(const std::vector<std::vector<int>>& rows) {
  if (rows.empty() || rows.front().empty()) {
    throw InvalidInput("table: dimensions must be positive");
  }
  ContingencyTable t(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
  for (int i = 0; i < t.rows(); ++i) {
    if (static_cast<int>(rows[i].size()) != t.cols()) {
      throw InvalidInput("table: ragged rows");
    }
    for (int j = 0; j < t.cols(); ++j) t.at(i, j) = rows[i][j];
  }
  return t;
}

int ContingencyTable::row_sum(int i) const {
  int s = 0;
  for (int j = 0; j < cols_; ++j) s += at(i, j);
  return s;
}

int ContingencyTable::col_sum(int j) const {
  int s = 0;
  for (int i = 0; i < rows_; ++i) s += at(i, j);
  return s;
}

long long ContingencyTable::sum_of_squares() const {
  long long s = 0;
  for (int v : k_) s += static_cast<long long>(v) * v;
  return s;
}

bool ContingencyTable::operator==(const ContingencyTable& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && k_ == other.k_;
}

bool ContingencyTable::operator<(const ContingencyTable& other) const {
  if (rows_ != other.rows_) return rows_ < other.rows_;
  if (cols_ != other.cols_) return cols_ < other.cols_;
  return k_ < other.k_;
}

std::string ContingencyTable::key() const {
  std::string out;
  for (int i = 0; i < rows_; ++i) {
    if (i) out += ";";
    for (int j = 0; j < cols_; ++j) {
      if (j) out += ",";
      out += std::to_string(at(i, j));
    }
  }
  return out;
}

void validate_table(const LandscapeSpec& spec, const ContingencyTable& table) {
  if (table.rows() != spec.rho_block_count() || table.cols() != spec.obs_block_count()) {
    throw InvalidInput("table: shape does not match spec block structure");
  }
  for (int i = 0; i < table.rows(); ++i) {
    for (int j = 0; j < table.cols(); ++j) {
      if (table.at(i, j) < 0) throw InvalidInput("table: negative entry");
    }
    if (table.row_sum(i) != spec.rho_mults()[i]) {
      throw InvalidInput("table: row sum " + std::to_string(i) +
                         " differs from rho multiplicity");
    }
  }
  for (int j = 0; j < table.cols(); ++j) {
    if (table.col_sum(j) != spec.obs_mults()[j]) {
      throw InvalidInput("table: column sum " + std::to_string(j) +
                         " differs from obs multiplicity");
    }
  }
}

namespace {

struct Enumerator {
  const LandscapeSpec& spec;
  const std::function<void(const ContingencyTable&)>& sink;
  std::uint64_t max_tables;
  std::uint64_t count = 0;
  ContingencyTable table;
  std::vector<int> col_remaining;

  Enumerator(const LandscapeSpec& s,
             const std::function<void(const ContingencyTable&)>& f,
             std::uint64_t guard)
      : spec(s), sink(f), max_tables(guard),
        table(s.rho_block_count(), s.obs_block_count()),
        col_remaining(s.obs_mults().begin(), s.obs_mults().end()) {}

  void emit() {
    if (++count > max_tables) {
      throw GuardExceeded("table enumeration exceeded max-tables=" +
                          std::to_string(max_tables));
    }
    sink(table);
  }

  // Fill row i from column j onward with row_left still to place.
  void fill(int i, int j, int row_left) {
    const int cols = table.cols();
    if (j == cols - 1) {
      if (row_left > col_remaining[j]) return;
      table.at(i, j) = row_left;
      col_remaining[j] -= row_left;
      next_row(i);
      col_remaining[j] += row_left;
      table.at(i, j) = 0;
      return;
    }
    // Capacity of the remaining cells bounds how little we may place here.
    int tail_capacity = 0;
    for (int t = j + 1; t < cols; ++t) tail_capacity += col_remaining[t];
    const int lo = std::max(0, row_left - tail_capacity);
    const int hi = std::min(row_left, col_remaining[j]);
    for (int v = lo; v <= hi; ++v) {
      table.at(i, j) = v;
      col_remaining[j] -= v;
      fill(i, j + 1, row_left - v);
      col_remaining[j] += v;
      table.at(i, j) = 0;
    }
  }

  void next_row(int i) {
    if (i + 1 == table.rows()) {
      emit();
      return;
    }
    fill(i + 1, 0, spec.rho_mults()[i + 1]);
  }

  void run() { fill(0, 0, spec.rho_mults()[0]); }
};

}  // namespace

std::uint64_t enumerate_tables(const LandscapeSpec& spec,
                               const std::function<void(const ContingencyTable&)>& sink,
                               std::uint64_t max_tables) {
  Enumerator e(spec, sink, max_tables);
  e.run();
  return e.count;
}

std::vector<ContingencyTable> all_tables(const LandscapeSpec& spec,
                                         std::uint64_t max_tables) {
  std::vector<ContingencyTable> out;
  enumerate_tables(spec, [&out](const ContingencyTable& t) { out.push_back(t); },
                   max_tables);
  return out;
}

PairingPermutation::PairingPermutation(std::vector<int> sigma_of_rho)
    : map_(std::move(sigma_of_rho)) {
  std::vector<bool> seen(map_.size(), false);
  for (int v : map_) {
    if (v < 0 || v >= static_cast<int>(map_.size()) || seen[v]) {
      throw InvalidInput("pairing: not a bijection");
    }
    seen[v] = true;
  }
}

ComplexMatrix PairingPermutation::matrix() const {
  const int n = size();
  ComplexMatrix p = ComplexMatrix::Zero(n, n);
  for (int j = 0; j < n; ++j) p(map_[j], j) = 1.0;
  return p;
}

PairingPermutation canonical_permutation(const LandscapeSpec& spec,
                                         const ContingencyTable& table) {
  validate_table(spec, table);
  const int n = spec.dim();
  std::vector<int> map(n, -1);
  std::vector<int> rho_cursor(spec.rho_block_count());
  std::vector<int> obs_cursor(spec.obs_block_count());
  for (int i = 0; i < spec.rho_block_count(); ++i) {
    rho_cursor[i] = spec.rho_block_offset(i);
  }
  for (int j = 0; j < spec.obs_block_count(); ++j) {
    obs_cursor[j] = spec.obs_block_offset(j);
  }
  for (int i = 0; i < table.rows(); ++i) {
    for (int j = 0; j < table.cols(); ++j) {
      for (int t = 0; t < table.at(i, j); ++t) {
        map[rho_cursor[i]++] = obs_cursor[j]++;
      }
    }
  }
  return PairingPermutation(std::move(map));
}

ContingencyTable table_from_permutation(const LandscapeSpec& spec,
                                        const std::vector<int>& sigma_of_rho) {
  if (static_cast<int>(sigma_of_rho.size()) != spec.dim()) {
    throw InvalidInput("pairing: length differs from spec dimension");
  }
  PairingPermutation pairing{std::vector<int>(sigma_of_rho)};
  ContingencyTable table(spec.rho_block_count(), spec.obs_block_count());
  for (int j = 0; j < spec.dim(); ++j) {
    ++table.at(spec.rho_block_of(j), spec.obs_block_of(pairing(j)));
  }
  return table;
}

}  // namespace landscape
