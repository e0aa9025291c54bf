#include "pircon/signed_perm.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>

#include "pircon/error.hpp"

namespace pircon {

int to_slot(int n, int position) { return position < 0 ? position + n : position + n - 1; }
int from_slot(int n, int slot) { return slot < n ? slot - n : slot - n + 1; }

std::vector<int> signed_range(int n) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(2 * n));
  for (int s = 0; s < 2 * n; ++s) out.push_back(from_slot(n, s));
  return out;
}

namespace {

std::string join(const std::vector<int>& values) {
  std::ostringstream os;
  for (std::size_t k = 0; k < values.size(); ++k) os << (k ? "," : "") << values[k];
  return os.str();
}

bool in_range(int n, int v) { return v != 0 && v >= -n && v <= n; }

}  // namespace

FullPermutation::FullPermutation(int n, std::vector<int> line) : n_(n), line_(std::move(line)) {
  if (n < 0 || line_.size() != static_cast<std::size_t>(2 * n))
    throw Error(ErrorCode::SizeMismatch, "full line needs 2n entries");
  std::vector<bool> hit(line_.size(), false);
  for (int v : line_) {
    if (!in_range(n, v) || hit[static_cast<std::size_t>(to_slot(n, v))])
      throw Error(ErrorCode::ParseError, "not a permutation of [±" + std::to_string(n) + "]: " + join(line_));
    hit[static_cast<std::size_t>(to_slot(n, v))] = true;
  }
}

FullPermutation FullPermutation::identity(int n) { return FullPermutation(n, signed_range(n)); }

FullPermutation FullPermutation::compose(const FullPermutation& inner) const {
  if (inner.n_ != n_) throw Error(ErrorCode::SizeMismatch, "composing permutations of different sizes");
  std::vector<int> line(line_.size());
  for (int s = 0; s < 2 * n_; ++s) line[static_cast<std::size_t>(s)] = (*this)(inner(from_slot(n_, s)));
  return FullPermutation(n_, std::move(line));
}

FullPermutation FullPermutation::inverse() const {
  std::vector<int> line(line_.size());
  for (int s = 0; s < 2 * n_; ++s) line[static_cast<std::size_t>(to_slot(n_, line_[static_cast<std::size_t>(s)]))] = from_slot(n_, s);
  return FullPermutation(n_, std::move(line));
}

bool FullPermutation::is_involution() const {
  for (int p : signed_range(n_))
    if ((*this)((*this)(p)) != p) return false;
  return true;
}

bool FullPermutation::has_fixed_point() const {
  for (int p : signed_range(n_))
    if ((*this)(p) == p) return true;
  return false;
}

bool FullPermutation::is_signed() const {
  for (int p : signed_range(n_))
    if ((*this)(-p) != -(*this)(p)) return false;
  return true;
}

std::string FullPermutation::to_string() const { return join(line_); }

SignedPermutation::SignedPermutation(std::vector<int> window) : window_(std::move(window)) {
  const int n = static_cast<int>(window_.size());
  std::vector<bool> hit(window_.size() + 1, false);
  for (int v : window_) {
    if (!in_range(n, v) || hit[static_cast<std::size_t>(std::abs(v))])
      throw Error(ErrorCode::ParseError, "not a signed permutation window: " + join(window_));
    hit[static_cast<std::size_t>(std::abs(v))] = true;
  }
}

SignedPermutation SignedPermutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
  return SignedPermutation(std::move(w));
}

SignedPermutation SignedPermutation::from_full(const FullPermutation& full) {
  if (!full.is_signed()) throw Error(ErrorCode::ParseError, "full line is not a signed permutation: " + full.to_string());
  std::vector<int> w;
  for (int i = 1; i <= full.n(); ++i) w.push_back(full(i));
  return SignedPermutation(std::move(w));
}

SignedPermutation SignedPermutation::parse(std::string_view text) {
  std::vector<int> values;
  std::string token;
  std::istringstream is{std::string(text)};
  while (std::getline(is, token, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stoi(token, &used));
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad integer '" + token + "' in '" + std::string(text) + "'");
    }
  }
  const int k = static_cast<int>(values.size());
  std::vector<int> sorted_abs;
  for (int v : values) sorted_abs.push_back(std::abs(v));
  std::sort(sorted_abs.begin(), sorted_abs.end());
  bool window = true;
  for (int i = 0; i < k; ++i) window = window && sorted_abs[static_cast<std::size_t>(i)] == i + 1;
  if (window) return SignedPermutation(std::move(values));
  if (k % 2 == 0) return from_full(FullPermutation(k / 2, std::move(values)));
  throw Error(ErrorCode::ParseError, "neither a window nor a full line: '" + std::string(text) + "'");
}

FullPermutation SignedPermutation::full() const {
  const int n = this->n();
  std::vector<int> line;
  line.reserve(static_cast<std::size_t>(2 * n));
  for (int p : signed_range(n)) line.push_back((*this)(p));
  return FullPermutation(n, std::move(line));
}

bool SignedPermutation::is_involution() const {
  for (int i = 1; i <= n(); ++i)
    if ((*this)((*this)(i)) != i) return false;
  return true;
}

bool SignedPermutation::has_fixed_point() const {
  // σ(-i) = -i iff σ(i) = i, so the window decides.
  for (int i = 1; i <= n(); ++i)
    if ((*this)(i) == i) return true;
  return false;
}

std::string SignedPermutation::to_string() const { return join(window_); }

int dominance_count(const FullPermutation& s, int i, int j) {
  int count = 0;
  for (int k : signed_range(s.n())) {
    if (k > i) break;
    if (s(k) >= j) ++count;
  }
  return count;
}

DominanceTable::DominanceTable(const FullPermutation& s) : size_(2 * s.n()) {
  counts_.assign(static_cast<std::size_t>(size_ * size_), 0);
  for (int a = 0; a < size_; ++a) {
    const int value_slot = to_slot(s.n(), s.line()[static_cast<std::size_t>(a)]);
    for (int b = 0; b < size_; ++b) {
      const int prev = a ? counts_[static_cast<std::size_t>((a - 1) * size_ + b)] : 0;
      counts_[static_cast<std::size_t>(a * size_ + b)] = prev + (value_slot >= b ? 1 : 0);
    }
  }
}

bool DominanceTable::dominated_by(const DominanceTable& other) const {
  if (other.size_ != size_) throw Error(ErrorCode::SizeMismatch, "Bruhat comparison across different n");
  for (std::size_t k = 0; k < counts_.size(); ++k)
    if (counts_[k] > other.counts_[k]) return false;
  return true;
}

bool bruhat_leq(const FullPermutation& a, const FullPermutation& b) {
  if (a.n() != b.n()) throw Error(ErrorCode::SizeMismatch, "Bruhat comparison across different n");
  return DominanceTable(a).dominated_by(DominanceTable(b));
}

bool bruhat_leq(const SignedPermutation& a, const SignedPermutation& b) { return bruhat_leq(a.full(), b.full()); }

std::string_view to_string(Family f) {
  switch (f) {
    case Family::Involutions: return "inv";
    case Family::FpfInvolutions: return "fpf-inv";
    case Family::SignedInvolutions: return "signed-inv";
    case Family::FpfSignedInvolutions: return "fpf-signed-inv";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  for (Family f : {Family::Involutions, Family::FpfInvolutions, Family::SignedInvolutions, Family::FpfSignedInvolutions})
    if (to_string(f) == name) return f;
  throw Error(ErrorCode::InvalidConfig, "unknown family '" + std::string(name) + "'");
}

bool is_signed_family(Family f) { return f == Family::SignedInvolutions || f == Family::FpfSignedInvolutions; }

namespace {

void pair_positions(int n, bool allow_fixed, std::vector<int>& line, int slot, std::vector<FullPermutation>& out) {
  while (slot < 2 * n && line[static_cast<std::size_t>(slot)] != 0) ++slot;
  if (slot == 2 * n) {
    out.emplace_back(n, line);
    return;
  }
  const int p = from_slot(n, slot);
  if (allow_fixed) {
    line[static_cast<std::size_t>(slot)] = p;
    pair_positions(n, allow_fixed, line, slot + 1, out);
    line[static_cast<std::size_t>(slot)] = 0;
  }
  for (int other = slot + 1; other < 2 * n; ++other) {
    if (line[static_cast<std::size_t>(other)] != 0) continue;
    line[static_cast<std::size_t>(slot)] = from_slot(n, other);
    line[static_cast<std::size_t>(other)] = p;
    pair_positions(n, allow_fixed, line, slot + 1, out);
    line[static_cast<std::size_t>(other)] = 0;
  }
  line[static_cast<std::size_t>(slot)] = 0;
}

// Window entries for i = 1..n; 0 marks unassigned.
void pair_signed(int n, bool allow_fixed, std::vector<int>& window, int i, std::vector<SignedPermutation>& out) {
  while (i <= n && window[static_cast<std::size_t>(i - 1)] != 0) ++i;
  if (i > n) {
    out.emplace_back(window);
    return;
  }
  auto& wi = window[static_cast<std::size_t>(i - 1)];
  for (int v : {i, -i}) {
    if (v == i && !allow_fixed) continue;
    wi = v;
    pair_signed(n, allow_fixed, window, i + 1, out);
  }
  for (int j = i + 1; j <= n; ++j) {
    auto& wj = window[static_cast<std::size_t>(j - 1)];
    if (wj != 0) continue;
    for (int sign : {1, -1}) {
      wi = sign * j;
      wj = sign * i;
      pair_signed(n, allow_fixed, window, i + 1, out);
    }
    wj = 0;
  }
  wi = 0;
}

}  // namespace

std::vector<SignedPermutation> generate_signed_family(Family f, int n) {
  if (!is_signed_family(f)) throw Error(ErrorCode::InvalidConfig, "family is not a signed family");
  std::vector<SignedPermutation> out;
  if (n < 1) return out;
  std::vector<int> window(static_cast<std::size_t>(n), 0);
  pair_signed(n, f == Family::SignedInvolutions, window, 1, out);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.window() < b.window(); });
  return out;
}

std::vector<FullPermutation> generate_family(Family f, int n) {
  std::vector<FullPermutation> out;
  if (is_signed_family(f)) {
    for (const auto& s : generate_signed_family(f, n)) out.push_back(s.full());
    return out;
  }
  if (n < 1) return out;
  std::vector<int> line(static_cast<std::size_t>(2 * n), 0);
  pair_positions(n, f == Family::Involutions, line, 0, out);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.line() < b.line(); });
  return out;
}

std::string element_name(const FullPermutation& s, bool as_window) {
  return as_window ? SignedPermutation::from_full(s).to_string() : s.to_string();
}

PermStats stats(const SignedPermutation& s) {
  PermStats st;
  const auto line = s.full().line();
  for (std::size_t a = 0; a < line.size(); ++a)
    for (std::size_t b = a + 1; b < line.size(); ++b)
      if (line[a] > line[b]) ++st.inv;
  for (int i = 1; i <= s.n(); ++i) {
    if (s(i) < 0) ++st.neg;
    if (-i <= s(i) && s(i) < i) ++st.dna;
  }
  if ((st.inv + st.neg) % 2 != 0)
    throw Error(ErrorCode::FormulaMismatch, "inv + neg is odd for " + s.to_string());
  st.length = (st.inv + st.neg) / 2;
  if (s.is_involution()) {
    if ((st.length + st.dna) % 2 != 0)
      throw Error(ErrorCode::FormulaMismatch, "length + dna is odd for involution " + s.to_string());
    st.rank = (st.length + st.dna) / 2;
  }
  return st;
}

SignedPermutation longest_element(int n) {
  std::vector<int> w;
  for (int i = 1; i <= n; ++i) w.push_back(-i);
  return SignedPermutation(std::move(w));
}

SignedPermutation fpf_bottom(int n) {
  std::vector<int> line(static_cast<std::size_t>(2 * n));
  for (int s = 0; s + 1 < 2 * n; s += 2) {
    line[static_cast<std::size_t>(s)] = from_slot(n, s + 1);
    line[static_cast<std::size_t>(s + 1)] = from_slot(n, s);
  }
  return SignedPermutation::from_full(FullPermutation(n, std::move(line)));
}

FullPermutation conjugate_by_w0(const FullPermutation& s) {
  std::vector<int> line;
  for (int p : signed_range(s.n())) line.push_back(-s(-p));
  return FullPermutation(s.n(), std::move(line));
}

PosetMap conjugation_map(const std::vector<FullPermutation>& elements) {
  std::map<std::vector<int>, Index> where;
  for (Index k = 0; k < elements.size(); ++k) where.emplace(elements[k].line(), k);
  std::vector<Index> img;
  for (const auto& e : elements) {
    auto it = where.find(conjugate_by_w0(e).line());
    if (it == where.end()) throw Error(ErrorCode::NotAutomorphism, "element list not closed under w0-conjugation");
    img.push_back(it->second);
  }
  return PosetMap(std::move(img));
}

std::string_view to_string(OrderDirection d) { return d == OrderDirection::Bruhat ? "bruhat" : "dual"; }

OrderDirection parse_order(std::string_view name) {
  if (name == "bruhat") return OrderDirection::Bruhat;
  if (name == "dual") return OrderDirection::Dual;
  throw Error(ErrorCode::InvalidConfig, "unknown order '" + std::string(name) + "'");
}

Poset build_bruhat_poset(const std::vector<FullPermutation>& elements, OrderDirection direction, bool window_names) {
  std::vector<DominanceTable> tables;
  std::vector<std::string> names;
  tables.reserve(elements.size());
  for (const auto& e : elements) {
    if (e.n() != elements.front().n()) throw Error(ErrorCode::SizeMismatch, "mixed n in element list");
    tables.emplace_back(e);
    names.push_back(element_name(e, window_names));
  }
  std::vector<IndexPair> relations;
  for (Index a = 0; a < elements.size(); ++a)
    for (Index b = 0; b < elements.size(); ++b)
      if (a != b && tables[a].dominated_by(tables[b]))
        relations.push_back(direction == OrderDirection::Bruhat ? IndexPair{a, b} : IndexPair{b, a});
  return Poset::build(std::move(names), relations);
}

Poset build_bruhat_poset(const std::vector<SignedPermutation>& elements, OrderDirection direction) {
  std::vector<FullPermutation> full;
  for (const auto& s : elements) full.push_back(s.full());
  return build_bruhat_poset(full, direction, true);
}

}  // namespace pircon
