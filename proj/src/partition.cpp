#include "zm/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace zm {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1)
      throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

std::strong_ordering Partition::operator<=>(const Partition& o) const {
  if (size_ != o.size_) return size_ <=> o.size_;
  // Same size: reverse-lexicographic, larger first part earlier.
  size_t n = std::min(parts_.size(), o.parts_.size());
  for (size_t i = 0; i < n; ++i) {
    if (parts_[i] != o.parts_[i]) return o.parts_[i] <=> parts_[i];
  }
  return parts_.size() <=> o.parts_.size();
}

std::string Partition::str() const {
  if (parts_.empty()) return "-";
  std::ostringstream os;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  return os.str();
}

Partition Partition::parse(const std::string& text) {
  if (text.empty() || text == "-") return Partition{};
  std::vector<int> parts;
  std::istringstream is(text);
  std::string tok;
  while (std::getline(is, tok, ',')) parts.push_back(std::stoi(tok));
  return Partition(std::move(parts));
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative n");
  std::vector<Partition> out;
  std::vector<int> cur;
  // Descending-first recursion yields reverse-lexicographic order.
  auto rec = [&](auto&& self, int rem, int max_part) -> void {
    if (rem == 0) {
      out.emplace_back(Partition(cur));
      return;
    }
    for (int p = std::min(rem, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, rem - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

int hook_length(const Partition& p, Square s) {
  if (!p.contains_square(s))
    throw std::out_of_range("hook_length: square outside diagram");
  int arm = p.part(s.row) - s.col;
  int leg = 0;
  for (int r = s.row + 1; r <= p.rows() && p.part(r) >= s.col; ++r) ++leg;
  return arm + leg + 1;
}

mpz_class dimension(const Partition& p) {
  mpz_class num = 1;
  for (int k = 2; k <= p.size(); ++k) num *= k;
  for (int r = 1; r <= p.rows(); ++r)
    for (int c = 1; c <= p.part(r); ++c)
      num /= hook_length(p, {r, c});  // exact: hook products divide n!
  return num;
}

MayaSet::MayaSet(std::vector<int> plus_twice, std::vector<int> minus_twice)
    : plus_twice_(std::move(plus_twice)), minus_twice_(std::move(minus_twice)) {
  std::sort(plus_twice_.begin(), plus_twice_.end());
  std::sort(minus_twice_.begin(), minus_twice_.end());
  for (int t : plus_twice_)
    if (t <= 0 || t % 2 == 0)
      throw std::invalid_argument("MayaSet: plus modes must be positive odd");
  for (int t : minus_twice_)
    if (t >= 0 || (-t) % 2 == 0)
      throw std::invalid_argument("MayaSet: minus modes must be negative odd");
  if (std::adjacent_find(plus_twice_.begin(), plus_twice_.end()) != plus_twice_.end() ||
      std::adjacent_find(minus_twice_.begin(), minus_twice_.end()) != minus_twice_.end())
    throw std::invalid_argument("MayaSet: duplicate mode");
}

bool MayaSet::contains(HalfInt k) const {
  if (k.twice > 0)
    return std::binary_search(plus_twice_.begin(), plus_twice_.end(), k.twice);
  return !std::binary_search(minus_twice_.begin(), minus_twice_.end(), k.twice);
}

long MayaSet::energy_twice() const {
  long e = 0;
  for (int t : plus_twice_) e += t;
  for (int t : minus_twice_) e -= t;
  return e;
}

int MayaSet::count_above(HalfInt k) const {
  auto plus_above = plus_twice_.end() -
                    std::upper_bound(plus_twice_.begin(), plus_twice_.end(), k.twice);
  if (k.twice > 0) return static_cast<int>(plus_above);
  // Negative occupied modes above k: all negatives in (k, 0) minus the vacant ones.
  int negatives_between = (-k.twice - 1) / 2;
  auto vacant_above =
      minus_twice_.end() -
      std::upper_bound(minus_twice_.begin(), minus_twice_.end(), k.twice);
  return static_cast<int>(plus_above) + negatives_between -
         static_cast<int>(vacant_above);
}

std::vector<HalfInt> MayaSet::descending(int count) const {
  std::vector<HalfInt> out;
  out.reserve(count);
  int t = plus_twice_.empty() ? -1 : plus_twice_.back();
  while (static_cast<int>(out.size()) < count) {
    if (contains(HalfInt(t))) out.push_back(HalfInt(t));
    t -= 2;
  }
  return out;
}

MayaSet maya(const Partition& p) {
  std::vector<int> plus, minus;
  // Occupied modes are lambda_i - i + 1/2 for all i >= 1.
  int len = p.rows();
  std::vector<int> occupied;
  occupied.reserve(len);
  for (int i = 1; i <= len; ++i) occupied.push_back(2 * (p.part(i) - i) + 1);
  for (int t : occupied)
    if (t > 0) plus.push_back(t);
  // Negative modes are vacant iff not among the occupied list and above
  // the all-occupied region; rows i > len occupy -i + 1/2 downward.
  for (int t = -1; t >= -(2 * len - 1); t -= 2) {
    if (std::find(occupied.begin(), occupied.end(), t) == occupied.end())
      minus.push_back(t);
  }
  return MayaSet(std::move(plus), std::move(minus));
}

Partition from_maya(const MayaSet& s) {
  if (s.charge() != 0)
    throw std::invalid_argument("from_maya: nonzero charge " +
                                std::to_string(s.charge()));
  if (s.plus().empty()) return Partition{};  // charge 0: no deviations at all
  // Rows below the deepest vacancy are all zero, so it suffices to walk
  // the members above it.
  int window = s.count_above(HalfInt(s.minus().front()));
  std::vector<HalfInt> top = s.descending(window);
  std::vector<int> parts;
  for (size_t i = 0; i < top.size(); ++i) {
    int li = (top[i].twice - 1) / 2 + static_cast<int>(i) + 1;  // s_i + i - 1/2
    if (li < 0) throw std::logic_error("from_maya: malformed set");
    if (li > 0) parts.push_back(li);
  }
  return Partition(std::move(parts));
}

MayaSet maya_from_window(const std::vector<int>& window_twice, int bottom_twice) {
  std::vector<int> plus, minus;
  for (int t : window_twice) {
    if (t < bottom_twice)
      throw std::invalid_argument("maya_from_window: member below window");
    if (t > 0) plus.push_back(t);
  }
  for (int t = -1; t >= bottom_twice; t -= 2) {
    if (std::find(window_twice.begin(), window_twice.end(), t) ==
        window_twice.end())
      minus.push_back(t);
  }
  return MayaSet(std::move(plus), std::move(minus));
}

Frobenius frobenius(const Partition& p) {
  MayaSet s = maya(p);
  Frobenius f;
  for (auto it = s.plus().rbegin(); it != s.plus().rend(); ++it)
    f.plus.push_back(HalfInt(*it));
  for (auto it = s.minus().rbegin(); it != s.minus().rend(); ++it)
    f.minus.push_back(HalfInt(*it));
  return f;
}

namespace {

// A rim hook of length r is a particle move k -> k + r in the Maya set.
// Height is 1 + #occupied modes strictly between k and k + r; the strip
// occupies diagonals k+1/2 ... k+r-1/2, so its content sum is
// r*k + r^2/2 = (r*twice + r*r)/2.
MayaSet moved(const MayaSet& s, int from_twice, int to_twice) {
  std::vector<int> plus = s.plus();
  std::vector<int> minus = s.minus();
  auto drop = [](std::vector<int>& v, int t) {
    v.erase(std::find(v.begin(), v.end(), t));
  };
  // remove `from`
  if (from_twice > 0)
    drop(plus, from_twice);
  else
    minus.push_back(from_twice);
  // insert `to`
  if (to_twice > 0)
    plus.push_back(to_twice);
  else
    drop(minus, to_twice);
  return MayaSet(std::move(plus), std::move(minus));
}

int occupied_between(const MayaSet& s, int lo_twice, int hi_twice) {
  int count = 0;
  for (int t = lo_twice + 2; t < hi_twice; t += 2)
    if (s.contains(HalfInt(t))) ++count;
  return count;
}

std::vector<int> candidate_modes(const MayaSet& s, int r) {
  // Occupied modes whose move by +-r can change occupancy: everything in
  // a window spanning the deviations plus r slack on both sides.
  int lo = s.minus().empty() ? -1 : s.minus().front();
  int hi = s.plus().empty() ? -1 : s.plus().back();
  std::vector<int> out;
  for (int t = lo - 2 * r; t <= hi + 2 * r; t += 2)
    if (t % 2 != 0 && s.contains(HalfInt(t))) out.push_back(t);
  return out;
}

}  // namespace

std::vector<RimHook> addable_rim_hooks(const Partition& p, int r) {
  if (r < 1) throw std::invalid_argument("rim hook length must be >= 1");
  MayaSet s = maya(p);
  std::vector<RimHook> out;
  for (int t : candidate_modes(s, r)) {
    int to = t + 2 * r;
    if (s.contains(HalfInt(to))) continue;
    RimHook h;
    h.target = from_maya(moved(s, t, to));
    h.length = r;
    h.height = occupied_between(s, t, to) + 1;
    h.content_sum = (r * t + r * r) / 2;
    out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end(),
            [](const RimHook& a, const RimHook& b) { return a.target < b.target; });
  return out;
}

std::vector<RimHook> removable_rim_hooks(const Partition& p, int r) {
  if (r < 1) throw std::invalid_argument("rim hook length must be >= 1");
  MayaSet s = maya(p);
  std::vector<RimHook> out;
  for (int t : candidate_modes(s, r)) {
    int to = t - 2 * r;
    if (s.contains(HalfInt(to))) continue;
    RimHook h;
    h.target = from_maya(moved(s, t, to));
    h.length = r;
    h.height = occupied_between(s, to, t) + 1;
    // Removed strip lies on diagonals k-r+1/2 ... k-1/2 of the source.
    h.content_sum = (r * t - r * r) / 2;
    out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end(),
            [](const RimHook& a, const RimHook& b) { return a.target < b.target; });
  return out;
}

namespace {

// Component mode map: k = c + r*(t - 1/2), in twice-values
// k2 = c2 + r*(t2 - 1).
int component_to_global(int c_twice, int r, int t_twice) {
  return c_twice + r * (t_twice - 1);
}

MayaSet component_set(const MayaSet& s, int c_twice, int r) {
  std::vector<int> plus, minus;
  // Window in t-space wide enough to see all deviations of s.
  int lo = s.minus().empty() ? -1 : s.minus().front();
  int hi = s.plus().empty() ? 1 : s.plus().back();
  int t_lo = -(std::abs(lo) / r + 2) * 2 - 1;
  int t_hi = (std::abs(hi) / r + 2) * 2 + 1;
  for (int t2 = 1; t2 <= t_hi; t2 += 2)
    if (s.contains(HalfInt(component_to_global(c_twice, r, t2))))
      plus.push_back(t2);
  for (int t2 = -1; t2 >= t_lo; t2 -= 2)
    if (!s.contains(HalfInt(component_to_global(c_twice, r, t2))))
      minus.push_back(t2);
  return MayaSet(std::move(plus), std::move(minus));
}

// Shifts all modes of a Maya set by an integer d (charge changes by d).
// Membership of the result is s.contains(k - d); deviations from the
// vacuum can only occur near 0 or near the shifted deviations of s.
MayaSet shifted(const MayaSet& s, int d) {
  int s_lo = s.minus().empty() ? -1 : s.minus().front();
  int s_hi = s.plus().empty() ? 1 : s.plus().back();
  int lo = std::min(-1, s_lo + 2 * d) - 2;
  int hi = std::max(1, s_hi + 2 * d) + 2;
  std::vector<int> plus, minus;
  for (int k2 = lo; k2 <= hi; k2 += 2) {
    bool occ = s.contains(HalfInt(k2 - 2 * d));
    if (occ && k2 > 0) plus.push_back(k2);
    if (!occ && k2 < 0) minus.push_back(k2);
  }
  return MayaSet(std::move(plus), std::move(minus));
}

}  // namespace

namespace {

// Positive t-modes map to positive global modes and vice versa, so the
// deviation lists transport directly through the component map.
MayaSet assemble_components(const std::vector<MayaSet>& components, int r) {
  std::vector<int> plus, minus;
  for (int idx = 0; idx < r; ++idx) {
    int c2 = 2 * idx + 1;
    for (int t2 : components[idx].plus())
      plus.push_back(component_to_global(c2, r, t2));
    for (int t2 : components[idx].minus())
      minus.push_back(component_to_global(c2, r, t2));
  }
  return MayaSet(std::move(plus), std::move(minus));
}

}  // namespace

CoreQuotient core_quotient(const Partition& p, int r) {
  if (r < 1) throw std::invalid_argument("core_quotient: r must be >= 1");
  MayaSet s = maya(p);
  CoreQuotient out;
  std::vector<MayaSet> core_components;
  for (int c2 = 1; c2 <= 2 * r - 1; c2 += 2) {
    MayaSet comp = component_set(s, c2, r);
    int d = comp.charge();
    out.charges.push_back(d);
    out.quotients.push_back(from_maya(shifted(comp, -d)));
    // Core component: the charge-d vacuum {d-1/2, d-3/2, ...}.
    core_components.push_back(shifted(MayaSet{}, d));
  }
  out.core = from_maya(assemble_components(core_components, r));
  return out;
}

Partition from_core_quotient(const Partition& core,
                             const std::vector<Partition>& quotients, int r) {
  if (r < 1) throw std::invalid_argument("from_core_quotient: r must be >= 1");
  if (static_cast<int>(quotients.size()) != r)
    throw std::invalid_argument("from_core_quotient: need exactly r quotients");
  std::vector<int> charges = core_quotient(core, r).charges;
  std::vector<MayaSet> components;
  for (int idx = 0; idx < r; ++idx)
    components.push_back(shifted(maya(quotients[idx]), charges[idx]));
  return from_maya(assemble_components(components, r));
}

}  // namespace zm
