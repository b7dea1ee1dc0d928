#include "dcsd/language.hpp"

#include <algorithm>

#include "dcsd/error.hpp"

namespace dcsd {

RowSet extension_of(std::span<const int> ids, const PropositionPool& pool) {
  RowSet ext = RowSet::full(pool.rows());
  for (int id : ids) ext &= pool.extension(id);
  return ext;
}

int core_index(std::span<const int> ids, const RowSet& extension, const PropositionPool& pool) {
  if (extension.is_full()) return 0;
  RowSet prefix = RowSet::full(pool.rows());
  for (int id : ids) {
    prefix &= pool.extension(id);
    if (prefix.count() == extension.count()) return id;
  }
  throw InvariantError("cached extension does not match conjunction");
}

Conjunction Conjunction::bottom(const PropositionPool& pool) {
  return Conjunction({}, RowSet::full(pool.rows()), 0);
}

Conjunction Conjunction::of(std::vector<int> ids, const PropositionPool& pool) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  RowSet ext = extension_of(ids, pool);
  const int core = dcsd::core_index(ids, ext, pool);
  return Conjunction(std::move(ids), std::move(ext), core);
}

bool Conjunction::contains(int id) const {
  return std::binary_search(props_.begin(), props_.end(), id);
}

std::string Conjunction::describe(const PropositionPool& pool) const {
  if (props_.empty()) return "true";
  std::string out;
  for (int id : props_) {
    if (!out.empty()) out += " & ";
    out += pool.at(id).label;
  }
  return out;
}

namespace {

// ext(p) ⊇ ext, via the occurrence count |ext(p) ∩ ext| = |ext|.
bool covers(const RowSet& prop_ext, const RowSet& ext) {
  return prop_ext.intersection_count(ext) == ext.count();
}

}  // namespace

Conjunction closure(const Conjunction& sigma, const PropositionPool& pool) {
  std::vector<int> ids;
  for (const Proposition& p : pool.propositions()) {
    if (covers(p.extension, sigma.extension())) ids.push_back(p.id);
  }
  const int core = dcsd::core_index(ids, sigma.extension(), pool);
  return Conjunction(std::move(ids), sigma.extension(), core);
}

bool is_closed(const Conjunction& sigma, const PropositionPool& pool) {
  for (const Proposition& p : pool.propositions()) {
    if (!sigma.contains(p.id) && covers(p.extension, sigma.extension())) return false;
  }
  return true;
}

std::vector<Conjunction> refine_cnj(const Conjunction& sigma, const PropositionPool& pool) {
  std::vector<Conjunction> out;
  if (sigma.extension().empty()) return out;
  const int k = static_cast<int>(pool.size());
  for (int i = sigma.max_id() + 1; i <= k; ++i) {
    std::vector<int> ids = sigma.props();
    ids.push_back(i);
    RowSet ext = sigma.extension() & pool.extension(i);
    const int core = dcsd::core_index(ids, ext, pool);
    out.push_back(Conjunction(std::move(ids), std::move(ext), core));
  }
  return out;
}

std::vector<Conjunction> refine_ccj(const Conjunction& sigma, const PropositionPool& pool) {
  if (!is_closed(sigma, pool)) {
    throw InvariantError("refine_ccj requires a closed conjunction, got " + ids_json(sigma));
  }
  std::vector<Conjunction> out;
  if (sigma.extension().empty()) return out;

  const int k = static_cast<int>(pool.size());
  const auto props = pool.propositions();
  for (int j = sigma.core_index() + 1; j <= k; ++j) {
    if (sigma.contains(j)) continue;
    RowSet ext = sigma.extension() & pool.extension(j);

    // Prefix test: no proposition below j outside sigma may join the closure.
    bool prefix_preserved = true;
    for (int i = 1; i < j && prefix_preserved; ++i) {
      if (!sigma.contains(i) && covers(props[static_cast<std::size_t>(i - 1)].extension, ext)) {
        prefix_preserved = false;
      }
    }
    if (!prefix_preserved) continue;

    std::vector<int> ids;
    for (int i = 1; i <= k; ++i) {
      if ((i < j && sigma.contains(i)) || i == j ||
          (i > j && covers(props[static_cast<std::size_t>(i - 1)].extension, ext))) {
        ids.push_back(i);
      }
    }
    const int core = dcsd::core_index(ids, ext, pool);
    out.push_back(Conjunction(std::move(ids), std::move(ext), core));
  }
  return out;
}

std::string ids_json(const Conjunction& sigma) {
  std::string out = "[";
  for (std::size_t i = 0; i < sigma.props().size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(sigma.props()[i]);
  }
  out += "]";
  return out;
}

}  // namespace dcsd
