#include "ssb/mpoly.hpp"

#include <mutex>

namespace ssb {

namespace {

struct MonoTable {
  std::vector<Mono> list;
  std::unordered_map<Mono, int> index;
};

std::mutex table_mu;
std::map<std::pair<int, int>, MonoTable> tables;

void enumerate(int n, int rest, int var, Mono cur, std::vector<Mono>& out) {
  if (var == n - 1) {
    out.push_back(cur + (Mono)rest * mono_shift(var));
    return;
  }
  for (int e = rest; e >= 0; e--)
    enumerate(n, rest - e, var + 1, cur + (Mono)e * mono_shift(var), out);
}

const MonoTable& table(int n, int d) {
  std::lock_guard<std::mutex> lk(table_mu);
  auto key = std::make_pair(n, d);
  auto it = tables.find(key);
  if (it != tables.end()) return it->second;
  if (n < 1 || n > kMaxVars || d < 0 || d > 200)
    throw InternalError("monomial table parameters out of range");
  MonoTable t;
  enumerate(n, d, 0, 0, t.list);
  for (int i = 0; i < (int)t.list.size(); i++) t.index[t.list[i]] = i;
  return tables.emplace(key, std::move(t)).first->second;
}

}  // namespace

const std::vector<Mono>& monomials(int n, int d) { return table(n, d).list; }

int monomial_index(int n, int d, Mono m) {
  const auto& t = table(n, d);
  auto it = t.index.find(m);
  if (it == t.index.end())
    throw InternalError("monomial_index: monomial of wrong degree");
  return it->second;
}

}  // namespace ssb
