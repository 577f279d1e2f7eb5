#include "fpure/order.hpp"

#include <algorithm>

#include <gmpxx.h>

#include "fpure/errors.hpp"

namespace fpure {

namespace {

std::vector<int> identity_priority(int nvars) {
  std::vector<int> p(static_cast<std::size_t>(nvars));
  for (int i = 0; i < nvars; ++i) p[static_cast<std::size_t>(i)] = i;
  return p;
}

void check_priority(int nvars, const std::vector<int>& priority) {
  if (static_cast<int>(priority.size()) != nvars)
    throw InvalidArgument("priority list must mention every variable exactly once");
  std::vector<bool> seen(static_cast<std::size_t>(nvars), false);
  for (int v : priority) {
    if (v < 0 || v >= nvars || seen[static_cast<std::size_t>(v)])
      throw InvalidArgument("priority list must be a permutation of the variables");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

std::vector<std::int64_t> unit_row(int nvars, int i, std::int64_t sign) {
  std::vector<std::int64_t> r(static_cast<std::size_t>(nvars), 0);
  r[static_cast<std::size_t>(i)] = sign;
  return r;
}

std::string priority_tag(const std::vector<int>& priority) {
  std::string s;
  for (std::size_t i = 0; i < priority.size(); ++i) {
    if (i) s += ">";
    s += "%" + std::to_string(priority[i]);
  }
  return s;
}

// Rows for one block part, appended in place. A degrevlex part grades by
// the total degree of the whole ring, then breaks ties by fewest of its
// lowest-priority variable first; this matches orders declared as
// "degrevlex on these variables, then ...".
void append_part_rows(std::vector<std::vector<std::int64_t>>& rows, int nvars,
                      const MonomialOrder::BlockPart& part) {
  if (part.kind == MonomialOrder::PartKind::lex) {
    for (int v : part.priority) rows.push_back(unit_row(nvars, v, 1));
  } else {
    rows.emplace_back(static_cast<std::size_t>(nvars), 1);
    for (auto it = part.priority.rbegin(); it != part.priority.rend(); ++it)
      rows.push_back(unit_row(nvars, *it, -1));
  }
}

}  // namespace

MonomialOrder::MonomialOrder(int nvars, std::vector<std::vector<std::int64_t>> rows,
                             std::string tag)
    : nvars_(nvars), rows_(std::move(rows)), tag_(std::move(tag)) {
  validate();
}

void MonomialOrder::validate() const {
  if (nvars_ < 1 || nvars_ > 256) throw InvalidArgument("unsupported variable count");
  if (rows_.empty()) throw InvalidArgument("order needs at least one weight row");
  for (const auto& r : rows_) {
    if (static_cast<int>(r.size()) != nvars_)
      throw DimensionMismatch("weight row has wrong length");
    for (std::int64_t w : r)
      if (w < -kWeightBound || w > kWeightBound)
        throw InvalidArgument("weight entry out of range");
  }
  // 1 < X_i for all i: the first nonzero weight in each column is positive.
  for (int j = 0; j < nvars_; ++j) {
    std::int64_t first = 0;
    for (const auto& r : rows_) {
      if (r[static_cast<std::size_t>(j)] != 0) {
        first = r[static_cast<std::size_t>(j)];
        break;
      }
    }
    if (first <= 0)
      throw InvalidArgument("matrix does not define a global order (column " +
                            std::to_string(j) + ")");
  }
  // Full column rank, checked exactly over the rationals.
  std::vector<std::vector<mpq_class>> m;
  m.reserve(rows_.size());
  for (const auto& r : rows_) {
    std::vector<mpq_class> row;
    row.reserve(r.size());
    for (std::int64_t w : r) row.emplace_back(static_cast<long>(w));
    m.push_back(std::move(row));
  }
  int rank = 0;
  for (int col = 0; col < nvars_; ++col) {
    int pivot = -1;
    for (int i = rank; i < static_cast<int>(m.size()); ++i) {
      if (sgn(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)]) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(rank)]);
    auto& prow = m[static_cast<std::size_t>(rank)];
    for (int i = 0; i < static_cast<int>(m.size()); ++i) {
      if (i == rank) continue;
      auto& row = m[static_cast<std::size_t>(i)];
      if (sgn(row[static_cast<std::size_t>(col)]) == 0) continue;
      mpq_class f = row[static_cast<std::size_t>(col)] / prow[static_cast<std::size_t>(col)];
      for (int j = col; j < nvars_; ++j)
        row[static_cast<std::size_t>(j)] -= f * prow[static_cast<std::size_t>(j)];
    }
    ++rank;
  }
  if (rank != nvars_)
    throw InvalidArgument("weight matrix is rank-deficient: not a total order");
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.nvars() != nvars_ || b.nvars() != nvars_)
    throw DimensionMismatch("monomial does not match order's variable count");
  for (const auto& r : rows_) {
    std::int64_t s = 0;
    for (int i = 0; i < nvars_; ++i)
      s += r[static_cast<std::size_t>(i)] * (a[i] - b[i]);
    if (s != 0) return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

MonomialOrder MonomialOrder::lex(const std::vector<int>& priority) {
  int n = static_cast<int>(priority.size());
  check_priority(n, priority);
  std::vector<std::vector<std::int64_t>> rows;
  rows.reserve(priority.size());
  for (int v : priority) rows.push_back(unit_row(n, v, 1));
  return MonomialOrder(n, std::move(rows), "lex(" + priority_tag(priority) + ")");
}

MonomialOrder MonomialOrder::degrevlex(const std::vector<int>& priority) {
  int n = static_cast<int>(priority.size());
  check_priority(n, priority);
  std::vector<std::vector<std::int64_t>> rows;
  rows.emplace_back(static_cast<std::size_t>(n), 1);
  for (std::size_t k = priority.size(); k-- > 1;)
    rows.push_back(unit_row(n, priority[k], -1));
  return MonomialOrder(n, std::move(rows), "degrevlex(" + priority_tag(priority) + ")");
}

MonomialOrder MonomialOrder::lex(int nvars) { return lex(identity_priority(nvars)); }
MonomialOrder MonomialOrder::degrevlex(int nvars) { return degrevlex(identity_priority(nvars)); }

MonomialOrder MonomialOrder::weighted(const std::vector<std::int64_t>& weights) {
  int n = static_cast<int>(weights.size());
  for (std::int64_t w : weights)
    if (w <= 0) throw InvalidArgument("weighted order needs positive weights");
  std::vector<std::vector<std::int64_t>> rows;
  rows.push_back(weights);
  rows.emplace_back(static_cast<std::size_t>(n), 1);
  for (int i = n - 1; i >= 1; --i) rows.push_back(unit_row(n, i, -1));
  std::string tag = "weighted([";
  for (int i = 0; i < n; ++i) tag += (i ? "," : "") + std::to_string(weights[static_cast<std::size_t>(i)]);
  tag += "])";
  return MonomialOrder(n, std::move(rows), std::move(tag));
}

MonomialOrder MonomialOrder::block(int nvars, const std::vector<BlockPart>& parts) {
  std::vector<bool> seen(static_cast<std::size_t>(nvars), false);
  for (const auto& part : parts) {
    for (int v : part.priority) {
      if (v < 0 || v >= nvars || seen[static_cast<std::size_t>(v)])
        throw InvalidArgument("block groups must partition the variables");
      seen[static_cast<std::size_t>(v)] = true;
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw InvalidArgument("block order is missing variables");
  std::vector<std::vector<std::int64_t>> rows;
  std::string tag = "block(";
  for (std::size_t k = 0; k < parts.size(); ++k) {
    append_part_rows(rows, nvars, parts[k]);
    if (k) tag += "; ";
    tag += parts[k].kind == PartKind::lex ? "lex(" : "degrevlex(";
    tag += priority_tag(parts[k].priority) + ")";
  }
  tag += ")";
  return MonomialOrder(nvars, std::move(rows), std::move(tag));
}

MonomialOrder MonomialOrder::matrix(std::vector<std::vector<std::int64_t>> rows) {
  if (rows.empty()) throw InvalidArgument("matrix order needs rows");
  int n = static_cast<int>(rows.front().size());
  std::string tag = "matrix([";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) tag += ",";
    tag += "[";
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      tag += (j ? "," : "") + std::to_string(rows[i][j]);
    tag += "]";
  }
  tag += "])";
  return MonomialOrder(n, std::move(rows), std::move(tag));
}

MonomialOrder MonomialOrder::append_eliminated_variable() const {
  int n = nvars_ + 1;
  std::vector<std::vector<std::int64_t>> rows;
  rows.push_back(unit_row(n, n - 1, 1));
  for (const auto& r : rows_) {
    std::vector<std::int64_t> row = r;
    row.push_back(0);
    rows.push_back(std::move(row));
  }
  return MonomialOrder(n, std::move(rows), "elim{" + tag_ + "}");
}

std::string MonomialOrder::description(const std::vector<std::string>& names) const {
  if (static_cast<int>(names.size()) != nvars_ && tag_.find('%') != std::string::npos)
    throw DimensionMismatch("variable name list has wrong length");
  std::string out;
  for (std::size_t i = 0; i < tag_.size();) {
    if (tag_[i] == '%') {
      std::size_t j = i + 1;
      while (j < tag_.size() && std::isdigit(static_cast<unsigned char>(tag_[j]))) ++j;
      out += names[static_cast<std::size_t>(std::stoi(tag_.substr(i + 1, j - i - 1)))];
      i = j;
    } else {
      out += tag_[i++];
    }
  }
  return out;
}

std::string MonomialOrder::description() const {
  return description(default_variable_names(nvars_));
}

}  // namespace fpure
