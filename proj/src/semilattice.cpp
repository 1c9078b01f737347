#include "semlat/semilattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace semlat {

const char* errorCodeName(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kNotCommutative: return "NotCommutative";
    case ErrorCode::kNotAssociative: return "NotAssociative";
    case ErrorCode::kNotIdempotent: return "NotIdempotent";
    case ErrorCode::kNoTop: return "NoTop";
    case ErrorCode::kNoBottom: return "NoBottom";
    case ErrorCode::kEntryOutOfRange: return "EntryOutOfRange";
    case ErrorCode::kOrderTooSmall: return "OrderTooSmall";
    case ErrorCode::kOrderTooLarge: return "OrderTooLarge";
    case ErrorCode::kMTooLarge: return "MTooLarge";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kFormatError: return "FormatError";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kUnknownMetric: return "UnknownMetric";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

std::vector<Element> ElementSet::elements() const {
  std::vector<Element> out;
  out.reserve(size());
  for (std::uint16_t b = bits_; b != 0; b &= static_cast<std::uint16_t>(b - 1)) {
    out.push_back(static_cast<Element>(std::countr_zero(b)));
  }
  return out;
}

namespace {

[[noreturn]] void fail(ErrorCode code, const std::string& msg) {
  throw ValidationError(code, std::string(errorCodeName(code)) + ": " + msg);
}

}  // namespace

Semilattice Semilattice::fromTable(int n, std::span<const Element> table) {
  if (n < 2) {
    throw ValidationError(ErrorCode::kOrderTooSmall,
                          "OrderTooSmall: order " + std::to_string(n) + " < 2");
  }
  if (n > kMaxOrder) {
    throw ValidationError(ErrorCode::kOrderTooLarge,
                          "OrderTooLarge: order " + std::to_string(n) + " > " +
                              std::to_string(kMaxOrder));
  }
  if (table.size() != static_cast<std::size_t>(n * n)) {
    throw ValidationError(ErrorCode::kInvalidArgument,
                          "table has " + std::to_string(table.size()) +
                              " entries, expected " + std::to_string(n * n));
  }
  auto at = [&](int s, int t) { return static_cast<int>(table[s * n + t]); };
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      if (at(s, t) >= n) {
        fail(ErrorCode::kEntryOutOfRange,
             "meet(" + std::to_string(s) + "," + std::to_string(t) + ")=" +
                 std::to_string(at(s, t)));
      }
    }
  }
  for (int s = 0; s < n; ++s) {
    if (at(s, s) != s) {
      fail(ErrorCode::kNotIdempotent, "meet(" + std::to_string(s) + "," +
                                          std::to_string(s) + ")=" +
                                          std::to_string(at(s, s)));
    }
  }
  for (int s = 0; s < n; ++s) {
    for (int t = s + 1; t < n; ++t) {
      if (at(s, t) != at(t, s)) {
        fail(ErrorCode::kNotCommutative,
             "pair (" + std::to_string(s) + "," + std::to_string(t) + ")");
      }
    }
  }
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      for (int u = 0; u < n; ++u) {
        if (at(at(s, t), u) != at(s, at(t, u))) {
          fail(ErrorCode::kNotAssociative,
               "triple (" + std::to_string(s) + "," + std::to_string(t) + "," +
                   std::to_string(u) + ")");
        }
      }
    }
  }
  int top = -1;
  int bottom = -1;
  for (int c = 0; c < n && (top < 0 || bottom < 0); ++c) {
    bool isTop = true;
    bool isBottom = true;
    for (int s = 0; s < n; ++s) {
      isTop = isTop && at(c, s) == s;
      isBottom = isBottom && at(c, s) == c;
    }
    if (isTop && top < 0) top = c;
    if (isBottom && bottom < 0) bottom = c;
  }
  if (top < 0) fail(ErrorCode::kNoTop, "no element t with meet(t,s)=s for all s");
  if (bottom < 0) fail(ErrorCode::kNoBottom, "no element b with meet(b,s)=b for all s");

  Semilattice S;
  S.n_ = n;
  S.table_.assign(table.begin(), table.end());
  S.top_ = static_cast<Element>(top);
  S.bottom_ = static_cast<Element>(bottom);
  S.derive();
  return S;
}

void Semilattice::derive() {
  for (int s = 0; s < n_; ++s) {
    up_[s] = ElementSet();
    down_[s] = ElementSet();
  }
  for (int s = 0; s < n_; ++s) {
    for (int t = 0; t < n_; ++t) {
      if (leq(s, t)) {
        up_[s].insert(t);
        down_[t].insert(s);
      }
    }
  }
  for (int s = 0; s < n_; ++s) {
    ElementSet strictlyBelow = down_[s].minus(ElementSet::single(s));
    ElementSet covers;
    for (Element t : strictlyBelow.elements()) {
      // t is a lower cover iff no u strictly between t and s.
      ElementSet between = strictlyBelow & up_[t];
      if (between == ElementSet::single(t)) covers.insert(t);
    }
    lower_covers_[s] = covers;
  }
  for (int s = 0; s < n_; ++s) upper_covers_[s] = ElementSet();
  for (int s = 0; s < n_; ++s) {
    for (Element t : lower_covers_[s].elements()) upper_covers_[t].insert(s);
  }
  linear_.resize(n_);
  std::iota(linear_.begin(), linear_.end(), Element{0});
  std::stable_sort(linear_.begin(), linear_.end(), [&](Element a, Element b) {
    return down_[a].size() < down_[b].size();
  });
  for (Element s : linear_) {
    int r = 0;
    for (Element t : lower_covers_[s].elements()) r = std::max(r, rank_[t] + 1);
    rank_[s] = r;
  }
}

Element Semilattice::join(int s, int t) const {
  ElementSet common = up_[s] & up_[t];
  Element j = top_;
  for (Element u : common.elements()) j = meet(j, u);
  return j;
}

Semilattice Semilattice::relabel(std::span<const Element> perm) const {
  std::vector<Element> out(table_.size());
  for (int s = 0; s < n_; ++s) {
    for (int t = 0; t < n_; ++t) {
      out[perm[s] * n_ + perm[t]] = perm[meet(s, t)];
    }
  }
  return fromTable(n_, out);
}

bool leq(const Semilattice& S, int s, int t) { return S.leq(s, t); }

ElementView elementView(const Semilattice& S, int s) {
  ElementView v;
  v.element = static_cast<Element>(s);
  v.upSet = S.upSet(s);
  v.perpSet = perpRelative(S, S.bottom(), s);
  v.lowerCovers = S.lowerCovers(s);
  v.isAtom = v.lowerCovers == ElementSet::single(S.bottom());
  v.isCoatom = S.upperCovers(s) == ElementSet::single(S.top());
  return v;
}

ElementSet atoms(const Semilattice& S) { return S.upperCovers(S.bottom()); }

ElementSet coatoms(const Semilattice& S) { return S.lowerCovers(S.top()); }

ElementSet perpRelative(const Semilattice& S, int a, int s) {
  ElementSet out;
  for (int t = 0; t < S.order(); ++t) {
    if (S.meet(t, s) == a) out.insert(t);
  }
  return out;
}

Semilattice makeChain(int n) {
  if (n < 2) {
    throw Error(ErrorCode::kOrderTooSmall, "chain needs n >= 2, got " + std::to_string(n));
  }
  if (n > kMaxOrder) {
    throw Error(ErrorCode::kOrderTooLarge, "chain order " + std::to_string(n) + " exceeds guard");
  }
  std::vector<Element> t(n * n);
  for (int s = 0; s < n; ++s) {
    for (int u = 0; u < n; ++u) t[s * n + u] = static_cast<Element>(std::min(s, u));
  }
  return Semilattice::fromTable(n, t);
}

Semilattice makeFan(int n) {
  if (n < 3) {
    throw Error(ErrorCode::kOrderTooSmall, "fan needs n >= 3, got " + std::to_string(n));
  }
  if (n > kMaxOrder) {
    throw Error(ErrorCode::kOrderTooLarge, "fan order " + std::to_string(n) + " exceeds guard");
  }
  const int top = n - 1;
  std::vector<Element> t(n * n);
  for (int s = 0; s < n; ++s) {
    for (int u = 0; u < n; ++u) {
      int m;
      if (s == u || u == top) m = s;
      else if (s == top) m = u;
      else m = 0;
      t[s * n + u] = static_cast<Element>(m);
    }
  }
  return Semilattice::fromTable(n, t);
}

std::string coverList(const Semilattice& S) {
  std::ostringstream os;
  bool first = true;
  for (Element s : S.linearExtension()) {
    for (Element t : S.upperCovers(s).elements()) {
      if (!first) os << ' ';
      os << int(s) << '<' << int(t);
      first = false;
    }
  }
  return os.str();
}

}  // namespace semlat
