#include "unfold/pattern.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace unfold {

Pattern::Pattern(std::vector<int> images) : images_(std::move(images)) {
  const int q = static_cast<int>(images_.size());
  if (q < 1) throw std::invalid_argument("pattern must have at least one point");
  std::vector<char> seen(static_cast<std::size_t>(q) + 1, 0);
  for (int v : images_) {
    if (v < 1 || v > q) {
      throw std::invalid_argument("pattern image out of range 1..q");
    }
    if (seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("pattern images are not a permutation");
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
  // Single cycle: the orbit of 1 must have length q.
  int len = 1;
  int t = images_[0];
  while (t != 1) {
    t = images_[static_cast<std::size_t>(t - 1)];
    ++len;
    if (len > q) break;
  }
  if (len != q) {
    throw std::invalid_argument("pattern is not a single cycle");
  }
  for (int i = 1; i <= q; ++i) {
    if (images_[static_cast<std::size_t>(i - 1)] == q) max_pos_ = i;
    if (images_[static_cast<std::size_t>(i - 1)] == 1) min_pos_ = i;
  }
}

Pattern Pattern::from_cycle(const std::vector<int>& cycle) {
  const int q = static_cast<int>(cycle.size());
  if (q < 1) throw std::invalid_argument("empty cycle");
  std::vector<char> seen(static_cast<std::size_t>(q) + 1, 0);
  for (int v : cycle) {
    if (v < 1 || v > q) throw std::invalid_argument("cycle entry out of range 1..q");
    if (seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("cycle entry repeated");
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<int> images(static_cast<std::size_t>(q), 0);
  for (int i = 0; i < q; ++i) {
    images[static_cast<std::size_t>(cycle[static_cast<std::size_t>(i)] - 1)] =
        cycle[static_cast<std::size_t>((i + 1) % q)];
  }
  return Pattern(std::move(images));
}

namespace {

std::vector<int> parse_int_list(const std::string& body) {
  std::vector<int> vals;
  std::string cur;
  auto flush = [&]() {
    if (cur.empty()) return;
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(cur, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad integer in pattern text: " + cur);
    }
    if (pos != cur.size()) {
      throw std::invalid_argument("bad integer in pattern text: " + cur);
    }
    vals.push_back(v);
    cur.clear();
  };
  for (char c : body) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
      cur += c;
    } else {
      throw std::invalid_argument(std::string("unexpected character in pattern text: ") + c);
    }
  }
  flush();
  if (vals.empty()) throw std::invalid_argument("no entries in pattern text");
  return vals;
}

}  // namespace

Pattern Pattern::parse(const std::string& text) {
  std::string t = text;
  std::size_t a = t.find_first_not_of(" \t\r\n");
  std::size_t b = t.find_last_not_of(" \t\r\n");
  if (a == std::string::npos) throw std::invalid_argument("empty pattern text");
  t = t.substr(a, b - a + 1);
  if (t.front() == '(') {
    if (t.back() != ')') throw std::invalid_argument("unbalanced parentheses in pattern text");
    return from_cycle(parse_int_list(t.substr(1, t.size() - 2)));
  }
  return Pattern(parse_int_list(t));
}

Pattern parse_pattern(const std::string& text) { return Pattern::parse(text); }

int Pattern::image(int i) const {
  if (i < 1 || i > period()) throw std::invalid_argument("position out of range");
  return images_[static_cast<std::size_t>(i - 1)];
}

std::vector<int> Pattern::trajectory() const {
  std::vector<int> t(static_cast<std::size_t>(period()));
  int cur = 1;
  for (int j = 0; j < period(); ++j) {
    t[static_cast<std::size_t>(j)] = cur;
    cur = images_[static_cast<std::size_t>(cur - 1)];
  }
  return t;
}

Pattern Pattern::reversed() const {
  const int q = period();
  std::vector<int> rev(static_cast<std::size_t>(q));
  for (int i = 1; i <= q; ++i) {
    rev[static_cast<std::size_t>(i - 1)] =
        q + 1 - images_[static_cast<std::size_t>(q - i)];
  }
  return Pattern(std::move(rev));
}

std::string Pattern::cycle_notation() const {
  std::ostringstream os;
  os << '(';
  int cur = 1;
  for (int j = 0; j < period(); ++j) {
    if (j) os << ',';
    os << cur;
    cur = images_[static_cast<std::size_t>(cur - 1)];
  }
  os << ')';
  return os.str();
}

bool operator==(const ModifiedPair& a, const ModifiedPair& b) {
  return a.t == b.t && a.m == b.m && a.degenerate == b.degenerate;
}

bool operator<(const ModifiedPair& a, const ModifiedPair& b) {
  if (a.t != b.t) return a.t < b.t;
  if (a.m != b.m) return a.m < b.m;
  return a.degenerate < b.degenerate;
}

UnfoldingPair make_unfolding_pair(long long p, long long q) {
  if (q < 2) throw std::invalid_argument("unfolding pair needs period >= 2");
  if (p < 0 || 2 * p > q + 2) {
    throw internal_error("unfolding pair out of range: " + std::to_string(p) + "/" +
                         std::to_string(q));
  }
  return UnfoldingPair{p, q};
}

OverRotationPair over_rotation_pair(const Pattern& P) {
  const int q = P.period();
  if (q < 2) throw std::invalid_argument("over-rotation pair needs period >= 2");
  int halves = 0;
  for (int i = 1; i <= q; ++i) {
    const int fi = P.image(i);
    const int ffi = P.image(fi);
    const long long a = fi - i;
    const long long b = ffi - fi;
    if (a * b <= 0) ++halves;
  }
  if (halves % 2 != 0) throw internal_error("over-rotation count is odd");
  return OverRotationPair{halves / 2, q};
}

std::vector<int> unfolding_index_set(const Pattern& P) {
  const int q = P.period();
  if (q < 2) throw std::invalid_argument("unfolding index set needs period >= 2");
  const int Mp = P.max_pos();
  const int mp = P.min_pos();
  // Folded walk of the orbit of the leftmost point. State Down means the lift
  // sits at (gains) + lambda(x_j), Up means (gains) + 1 - lambda(x_j); an
  // integer crossing is a gain recorded at the arrival index (j+1) mod q.
  std::vector<int> gains;
  bool up = false;
  int t = 1;
  for (int j = 0; j < q; ++j) {
    if (!up) {
      if (t >= Mp) {
        if (t == mp) {
          gains.push_back((j + 1) % q);
        } else {
          up = true;
        }
      }
    } else {
      if (t <= mp) {
        gains.push_back((j + 1) % q);
        up = false;
      }
    }
    t = P.image(t);
  }
  // The walk returns to the leftmost point, and an Up state there would place
  // the lift exactly on an integer from above, which is impossible.
  if (up) throw internal_error("folded walk ended Up");
  std::sort(gains.begin(), gains.end());
  return gains;
}

UnfoldingPair unfolding_pair(const Pattern& P) {
  const auto set = unfolding_index_set(P);
  return make_unfolding_pair(static_cast<long long>(set.size()), P.period());
}

int observable_phi(const Pattern& P, int i) {
  if (i < 0 || i >= P.period()) throw std::invalid_argument("index out of range 0..q-1");
  const auto set = unfolding_index_set(P);
  return std::binary_search(set.begin(), set.end(), i) ? 1 : 0;
}

int modality(const Pattern& P) {
  const int q = P.period();
  if (q < 2) throw std::invalid_argument("modality needs period >= 2");
  if (q == 2) return 1;
  int turns = 0;
  for (int i = 2; i <= q - 1; ++i) {
    const long long d1 = P.image(i) - P.image(i - 1);
    const long long d2 = P.image(i + 1) - P.image(i);
    if (d1 * d2 < 0) ++turns;
  }
  return turns;
}

bool is_divergent(const Pattern& P) {
  const int q = P.period();
  // L[y]: largest x < y with image(x) < x, or 0 if none.
  std::vector<int> L(static_cast<std::size_t>(q) + 1, 0);
  int best = 0;
  for (int y = 1; y <= q; ++y) {
    L[static_cast<std::size_t>(y)] = best;
    if (P.image(y) < y) best = y;
  }
  for (int y = 1; y <= q; ++y) {
    const int x = L[static_cast<std::size_t>(y)];
    if (x == 0) continue;
    const int zmax = std::min(P.image(y), q);
    for (int z = y + 1; z <= zmax; ++z) {
      if (P.image(z) <= x) return true;
    }
  }
  return false;
}

bool is_convergent(const Pattern& P) { return !is_divergent(P); }

bool is_sheer(const Pattern& P) {
  if (!is_convergent(P)) return false;
  const int Mp = P.max_pos();
  const int mp = P.min_pos();
  if (mp < Mp) return false;  // unreachable for convergent patterns
  for (int i = Mp; i < mp; ++i) {
    if (P.image(i + 1) >= P.image(i)) return false;
  }
  return true;
}

ModifiedPair modified_pair(long long p, long long q) {
  if (q < 1) throw std::invalid_argument("modified pair needs q >= 1");
  if (p < 0) throw std::invalid_argument("modified pair needs p >= 0");
  ModifiedPair mp;
  const long long g = std::gcd(p, q);
  mp.m = g;  // gcd(0, q) = q
  if (p == 0) {
    mp.t = rat(0);
    mp.degenerate = true;
  } else {
    mp.t = rat(p / g, q / g);
    mp.degenerate = false;
  }
  return mp;
}

}  // namespace unfold
