#include "instanton/report.hpp"

#include <algorithm>

namespace instanton {

bool Report::passed() const {
  return std::all_of(items.begin(), items.end(), [](const IdentityResult& r) { return r.pass; });
}

const IdentityResult* Report::first_failure() const {
  for (const auto& r : items)
    if (!r.pass) return &r;
  return nullptr;
}

void Report::append(const Report& other) { items.insert(items.end(), other.items.begin(), other.items.end()); }

}  // namespace instanton
