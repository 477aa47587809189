#include "kempkit/group.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdlib>
#include <map>
#include <mutex>
#include <set>

#include "kempkit/error.hpp"

namespace kempkit {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidSpec: return "invalid-spec";
    case ErrorKind::CapExceeded: return "cap-exceeded";
    case ErrorKind::GroupMismatch: return "group-mismatch";
    case ErrorKind::UndefinedPeriod: return "undefined-period";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::NotGenerating: return "not-generating";
    case ErrorKind::UndefinedConnectivity: return "undefined-connectivity";
    case ErrorKind::InternalInvariant: return "internal-invariant";
    case ErrorKind::TheoremFalsified: return "theorem-falsified";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

int default_cap() {
  static const int cap = [] {
    if (const char* env = std::getenv("KEMPKIT_CAP"); env != nullptr) {
      char* end = nullptr;
      long v = std::strtol(env, &end, 10);
      if (end != env && *end == '\0' && v >= 1 && v <= kMaxSupportedOrder) {
        return static_cast<int>(v);
      }
    }
    return 24;
  }();
  return cap;
}

namespace {

constexpr int kChunkBits = 8;

}  // namespace

struct Group::Impl {
  int n = 1;
  std::vector<int> orders;
  bool table_backed = false;
  std::string spec;
  std::vector<Element> add;  // n*n
  std::vector<Element> neg;
  std::vector<int> elem_order;
  Mask full = 1;
  int chunks = 1;
  // translate_table[(t * chunks + c) * 256 + byte] = image of the byte-chunk
  // c of a mask under x -> x + t.
  std::vector<Mask> translate_table;

  mutable std::once_flag subgroups_once;
  mutable std::vector<Mask> subgroups;

  void finish() {
    full = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
    neg.assign(n, 0);
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        if (add[x * n + y] == 0) {
          neg[x] = y;
          break;
        }
      }
    }
    elem_order.assign(n, 1);
    for (int x = 0; x < n; ++x) {
      int m = 1;
      for (Element acc = x; acc != 0; acc = add[acc * n + x]) ++m;
      elem_order[x] = m;
    }
    chunks = (n + kChunkBits - 1) / kChunkBits;
    translate_table.assign(static_cast<std::size_t>(n) * chunks * 256, 0);
    for (int t = 0; t < n; ++t) {
      for (int c = 0; c < chunks; ++c) {
        Mask* row = &translate_table[(static_cast<std::size_t>(t) * chunks + c) * 256];
        for (int byte = 1; byte < 256; ++byte) {
          int low = std::countr_zero(static_cast<unsigned>(byte));
          int x = c * kChunkBits + low;
          Mask bit = x < n ? Mask{1} << add[x * n + t] : 0;
          row[byte] = row[byte & (byte - 1)] | bit;
        }
      }
    }
  }
};

Group Group::cyclic_product(std::span<const int> orders, int cap) {
  if (cap > kMaxSupportedOrder) cap = kMaxSupportedOrder;
  long long product = 1;
  for (int d : orders) {
    if (d < 2) {
      throw Error(ErrorKind::InvalidSpec,
                  "cyclic factor order must be >= 2, got " + std::to_string(d));
    }
    product *= d;
    if (product > cap) {
      throw Error(ErrorKind::CapExceeded,
                  "group order exceeds cap " + std::to_string(cap));
    }
  }
  auto impl = std::make_shared<Impl>();
  impl->n = static_cast<int>(product);
  impl->orders.assign(orders.begin(), orders.end());
  if (orders.empty()) {
    impl->spec = "trivial";
  } else {
    for (std::size_t i = 0; i < orders.size(); ++i) {
      if (i) impl->spec += 'x';
      impl->spec += 'Z' + std::to_string(orders[i]);
    }
  }
  const int n = impl->n;
  const int r = static_cast<int>(orders.size());
  std::vector<std::vector<int>> digits(n, std::vector<int>(r));
  for (int x = 0; x < n; ++x) {
    int rest = x;
    for (int i = r - 1; i >= 0; --i) {
      digits[x][i] = rest % orders[i];
      rest /= orders[i];
    }
  }
  impl->add.assign(static_cast<std::size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      int idx = 0;
      for (int i = 0; i < r; ++i) {
        idx = idx * orders[i] + (digits[x][i] + digits[y][i]) % orders[i];
      }
      impl->add[x * n + y] = idx;
    }
  }
  impl->finish();
  return Group(std::move(impl));
}

Group Group::from_table(std::vector<Element> table, std::string label) {
  std::size_t n = 0;
  while (n * n < table.size()) ++n;
  if (n == 0 || n * n != table.size() || n > kMaxSupportedOrder) {
    throw Error(ErrorKind::InvalidSpec, "addition table must be square");
  }
  const int ni = static_cast<int>(n);
  for (int x = 0; x < ni; ++x) {
    if (table[x] != x || table[x * n] != x) {
      throw Error(ErrorKind::InvalidSpec, "index 0 is not an identity");
    }
    Mask row = 0;
    for (int y = 0; y < ni; ++y) {
      Element v = table[x * n + y];
      if (v < 0 || v >= ni || table[y * n + x] != v) {
        throw Error(ErrorKind::InvalidSpec, "table is not a commutative operation");
      }
      row |= Mask{1} << v;
    }
    if (std::popcount(row) != ni) {
      throw Error(ErrorKind::InvalidSpec, "table row is not a permutation");
    }
  }
  auto impl = std::make_shared<Impl>();
  impl->n = ni;
  impl->table_backed = true;
  impl->spec = std::move(label);
  impl->add = std::move(table);
  impl->finish();
  return Group(std::move(impl));
}

int Group::order() const noexcept { return impl_->n; }
const std::vector<int>& Group::orders() const noexcept { return impl_->orders; }
bool Group::table_backed() const noexcept { return impl_->table_backed; }
Mask Group::full() const noexcept { return impl_->full; }
const std::string& Group::spec() const noexcept { return impl_->spec; }

Element Group::add(Element x, Element y) const {
  return impl_->add[x * impl_->n + y];
}

Element Group::neg(Element x) const { return impl_->neg[x]; }

int Group::element_order(Element x) const { return impl_->elem_order[x]; }

Mask Group::translate(Mask m, Element t) const {
  const Impl& g = *impl_;
  const Mask* base = &g.translate_table[static_cast<std::size_t>(t) * g.chunks * 256];
  Mask out = 0;
  for (int c = 0; c < g.chunks && m != 0; ++c, m >>= kChunkBits) {
    out |= base[c * 256 + (m & 0xff)];
  }
  return out;
}

Mask Group::negate(Mask m) const {
  Mask out = 0;
  for (; m != 0; m &= m - 1) {
    out |= Mask{1} << impl_->neg[std::countr_zero(m)];
  }
  return out;
}

Mask Group::sumset(Mask a, Mask b) const {
  if (a == 0 || b == 0) return 0;
  if (std::popcount(a) > std::popcount(b)) std::swap(a, b);
  Mask out = 0;
  for (; a != 0; a &= a - 1) out |= translate(b, std::countr_zero(a));
  return out;
}

std::vector<int> Group::tuple(Element x) const {
  if (impl_->table_backed) return {x};
  const auto& orders = impl_->orders;
  std::vector<int> digits(orders.size());
  for (int i = static_cast<int>(orders.size()) - 1; i >= 0; --i) {
    digits[i] = x % orders[i];
    x /= orders[i];
  }
  return digits;
}

Element Group::from_tuple(std::span<const int> residues) const {
  if (impl_->table_backed) {
    if (residues.size() != 1 || residues[0] < 0 || residues[0] >= impl_->n) {
      throw Error(ErrorKind::Parse, "bad element for table-backed group");
    }
    return residues[0];
  }
  const auto& orders = impl_->orders;
  if (residues.size() != orders.size()) {
    throw Error(ErrorKind::Parse, "tuple has " + std::to_string(residues.size()) +
                                      " components, group " + impl_->spec + " needs " +
                                      std::to_string(orders.size()));
  }
  Element idx = 0;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (residues[i] < 0 || residues[i] >= orders[i]) {
      throw Error(ErrorKind::Parse, "residue " + std::to_string(residues[i]) +
                                        " out of range for Z" + std::to_string(orders[i]));
    }
    idx = idx * orders[i] + residues[i];
  }
  return idx;
}

std::string Group::format(Element x) const {
  if (impl_->table_backed) return "[" + std::to_string(x) + "]";
  std::string out = "(";
  auto digits = tuple(x);
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(digits[i]);
  }
  return out + ")";
}

std::string Group::invariant_key() const {
  // prime -> exponents of its primary cyclic factors
  std::map<int, std::vector<int>> primary;
  if (impl_->table_backed) {
    // #{x : x has order dividing p^k} = p^(sum_i min(k, e_i)), so the number
    // of exponents e_i >= k is the step in log_p of that count.
    int n = order();
    for (int p = 2; n > 1; ++p) {
      if (n % p != 0) continue;
      while (n % p == 0) n /= p;
      int prev_log = 0;
      for (long long pk = p;; pk *= p) {
        int count = 0;
        for (Element x = 0; x < order(); ++x) count += pk % element_order(x) == 0 ? 1 : 0;
        int log = 0;
        while (count > 1) {
          count /= p;
          ++log;
        }
        if (log == prev_log) break;
        const int at_least_k = log - prev_log;
        auto& exps = primary[p];
        exps.resize(std::max<std::size_t>(exps.size(), at_least_k), 0);
        for (int i = 0; i < at_least_k; ++i) ++exps[i];
        prev_log = log;
      }
    }
  } else {
    for (int d : impl_->orders) {
      for (int p = 2; d > 1; ++p) {
        int e = 0;
        while (d % p == 0) {
          d /= p;
          ++e;
        }
        if (e > 0) primary[p].push_back(e);
      }
    }
  }
  std::size_t rank = 0;
  for (auto& [p, exps] : primary) {
    std::sort(exps.begin(), exps.end(), std::greater<>());
    rank = std::max(rank, exps.size());
  }
  if (rank == 0) return "trivial";
  // Largest invariant factor first, then reverse so d1 | d2 | ... reads left to right.
  std::vector<long long> factors(rank, 1);
  for (const auto& [p, exps] : primary) {
    for (std::size_t i = 0; i < exps.size(); ++i) {
      for (int k = 0; k < exps[i]; ++k) factors[i] *= p;
    }
  }
  std::string key;
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    if (!key.empty()) key += 'x';
    key += 'Z' + std::to_string(*it);
  }
  return key;
}

Mask Group::closure(Mask m) const {
  Mask cur = m | 1;
  while (true) {
    Mask next = sumset(cur, cur);
    if ((next | cur) == cur) return cur;
    cur |= next;
  }
}

const std::vector<Mask>& Group::subgroup_masks() const {
  std::call_once(impl_->subgroups_once, [this] {
    std::set<Mask> seen{Mask{1}};
    std::vector<Mask> frontier{Mask{1}};
    while (!frontier.empty()) {
      std::vector<Mask> next;
      for (Mask h : frontier) {
        for (Element g = 0; g < impl_->n; ++g) {
          if (h >> g & 1) continue;
          Mask k = closure(h | Mask{1} << g);
          if (seen.insert(k).second) next.push_back(k);
        }
      }
      frontier = std::move(next);
    }
    std::vector<Mask> all(seen.begin(), seen.end());
    std::sort(all.begin(), all.end(), [](Mask a, Mask b) {
      int ca = std::popcount(a), cb = std::popcount(b);
      return ca != cb ? ca < cb : a < b;
    });
    impl_->subgroups = std::move(all);
  });
  return impl_->subgroups;
}

bool Group::same_as(const Group& other) const noexcept {
  if (impl_ == other.impl_) return true;
  return impl_->n == other.impl_->n && impl_->table_backed == other.impl_->table_backed &&
         impl_->orders == other.impl_->orders && impl_->add == other.impl_->add;
}

Group parse_group(std::string_view spec, int cap) {
  std::string s;
  for (char c : spec) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
  }
  if (s == "trivial") return Group::cyclic_product(std::vector<int>{}, cap);
  std::vector<int> orders;
  std::size_t pos = 0;
  while (true) {
    if (pos >= s.size() || s[pos] != 'z') {
      throw Error(ErrorKind::Parse, "bad group spec '" + std::string(spec) +
                                              "' at position " + std::to_string(pos) +
                                              ": expected 'Z'");
    }
    ++pos;
    std::size_t start = pos;
    long long value = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      value = value * 10 + (s[pos] - '0');
      if (value > 1'000'000) value = 1'000'000;
      ++pos;
    }
    if (pos == start) {
      throw Error(ErrorKind::Parse, "bad group spec '" + std::string(spec) +
                                              "' at position " + std::to_string(pos) +
                                              ": expected a cyclic order");
    }
    orders.push_back(static_cast<int>(value));
    if (pos == s.size()) break;
    if (s[pos] != 'x') {
      throw Error(ErrorKind::Parse, "bad group spec '" + std::string(spec) +
                                              "' at position " + std::to_string(pos) +
                                              ": expected 'x'");
    }
    ++pos;
  }
  return Group::cyclic_product(orders, cap);
}

std::vector<std::vector<int>> factor_lists_up_to(int max_order) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto& self, int min_factor, long long product) -> void {
    if (!cur.empty()) out.push_back(cur);
    for (int d = min_factor; product * d <= max_order; ++d) {
      cur.push_back(d);
      self(self, d, product * d);
      cur.pop_back();
    }
  };
  rec(rec, 2, 1);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    long long pa = 1, pb = 1;
    for (int d : a) pa *= d;
    for (int d : b) pb *= d;
    if (pa != pb) return pa < pb;
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace kempkit
