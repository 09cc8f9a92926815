#include "delorder/coxeter_matrix.hpp"

#include <json.hpp>

#include "delorder/errors.hpp"

namespace delorder {

namespace {

void check_index(int rank, int i) {
  if (i < 1 || i > rank) {
    throw InputError("generator index " + std::to_string(i) + " outside 1.." +
                     std::to_string(rank));
  }
}

}  // namespace

CoxeterMatrix::CoxeterMatrix(int rank) : rank_(rank) {
  if (rank < 1) throw InputError("matrix rank must be >= 1");
  entries_.assign(static_cast<std::size_t>(rank) * static_cast<std::size_t>(rank), 2);
  for (int i = 1; i <= rank; ++i) {
    entries_[static_cast<std::size_t>((i - 1) * rank + (i - 1))] = 1;
  }
}

int CoxeterMatrix::m(int i, int j) const {
  check_index(rank_, i);
  check_index(rank_, j);
  return entries_[static_cast<std::size_t>((i - 1) * rank_ + (j - 1))];
}

void CoxeterMatrix::set_m(int i, int j, int value) {
  check_index(rank_, i);
  check_index(rank_, j);
  entries_[static_cast<std::size_t>((i - 1) * rank_ + (j - 1))] = value;
  entries_[static_cast<std::size_t>((j - 1) * rank_ + (i - 1))] = value;
}

void CoxeterMatrix::validate() const {
  if (rank_ < 1) throw InputError("matrix rank must be >= 1");
  for (int i = 1; i <= rank_; ++i) {
    if (m(i, i) != 1) throw InputError("diagonal entries must be 1");
    for (int j = i + 1; j <= rank_; ++j) {
      int v = m(i, j);
      if (v != m(j, i)) throw InputError("matrix must be symmetric");
      if (v != 0 && v < 2) {
        throw InputError("off-diagonal entries must be >= 2 (0 for infinity)");
      }
    }
  }
}

CoxeterMatrix CoxeterMatrix::submatrix(const std::vector<int>& gens) const {
  if (gens.empty()) throw InputError("submatrix needs at least one generator");
  CoxeterMatrix out(static_cast<int>(gens.size()));
  for (std::size_t a = 0; a < gens.size(); ++a) {
    for (std::size_t b = 0; b < gens.size(); ++b) {
      out.set_m(static_cast<int>(a) + 1, static_cast<int>(b) + 1, m(gens[a], gens[b]));
    }
  }
  return out;
}

CoxeterMatrix CoxeterMatrix::permuted(const std::vector<int>& new_to_old) const {
  if (static_cast<int>(new_to_old.size()) != rank_) {
    throw InputError("generator order must list all " + std::to_string(rank_) + " generators");
  }
  std::vector<bool> seen(static_cast<std::size_t>(rank_), false);
  for (int g : new_to_old) {
    check_index(rank_, g);
    if (seen[static_cast<std::size_t>(g - 1)]) {
      throw InputError("generator order repeats generator " + std::to_string(g));
    }
    seen[static_cast<std::size_t>(g - 1)] = true;
  }
  return submatrix(new_to_old);
}

CoxeterMatrix CoxeterMatrix::parse_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("matrix JSON parse error: ") + e.what());
  }
  if (!j.is_object() || !j.contains("rank") || !j.contains("m")) {
    throw InputError("matrix JSON must be an object with \"rank\" and \"m\"");
  }
  int rank = 0;
  try {
    rank = j.at("rank").get<int>();
  } catch (const nlohmann::json::exception&) {
    throw InputError("matrix JSON: \"rank\" must be an integer");
  }
  if (rank < 1) throw InputError("matrix rank must be >= 1");
  CoxeterMatrix out(rank);
  const auto& rows = j.at("m");
  if (!rows.is_array() || static_cast<int>(rows.size()) != rank) {
    throw InputError("matrix JSON: \"m\" must be a rank x rank array");
  }
  for (int i = 0; i < rank; ++i) {
    const auto& row = rows.at(static_cast<std::size_t>(i));
    if (!row.is_array() || static_cast<int>(row.size()) != rank) {
      throw InputError("matrix JSON: \"m\" must be a rank x rank array");
    }
    for (int k = 0; k < rank; ++k) {
      int v = 0;
      try {
        v = row.at(static_cast<std::size_t>(k)).get<int>();
      } catch (const nlohmann::json::exception&) {
        throw InputError("matrix JSON: entries must be integers");
      }
      out.entries_[static_cast<std::size_t>(i * rank + k)] = v;
    }
  }
  out.validate();
  return out;
}

std::string CoxeterMatrix::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 1; i <= rank_; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 1; j <= rank_; ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  nlohmann::json j;
  j["rank"] = rank_;
  j["m"] = std::move(rows);
  return j.dump();
}

}  // namespace delorder
