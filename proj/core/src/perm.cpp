#include "monocover/perm.hpp"

#include <algorithm>
#include <charconv>
#include <utility>

namespace monocover {

Permutation::Permutation(int degree) {
  if (degree < 1)
    throw std::invalid_argument("permutation degree must be >= 1");
  images_.resize(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) images_[i] = i + 1;
}

Permutation Permutation::from_images(std::vector<int> images) {
  if (images.empty())
    throw std::invalid_argument("permutation degree must be >= 1");
  const int d = static_cast<int>(images.size());
  std::vector<char> seen(static_cast<std::size_t>(d), 0);
  for (int v : images) {
    if (v < 1 || v > d)
      throw std::invalid_argument("image table entry out of range");
    if (seen[v - 1])
      throw std::invalid_argument("image table is not a bijection");
    seen[v - 1] = 1;
  }
  return Permutation(raw_tag{}, std::move(images));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i + 1) return false;
  return true;
}

int Permutation::min_moved_point() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i + 1) return i + 1;
  return 0;
}

bool Permutation::operator<(const Permutation& other) const {
  if (degree() != other.degree()) return degree() < other.degree();
  return images_ < other.images_;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> out(static_cast<std::size_t>(p.degree()));
  for (int x = 1; x <= p.degree(); ++x) out[x - 1] = p(q(x));
  return Permutation::from_images(std::move(out));
}

Permutation inverse(const Permutation& p) {
  std::vector<int> out(static_cast<std::size_t>(p.degree()));
  for (int x = 1; x <= p.degree(); ++x) out[p(x) - 1] = x;
  return Permutation::from_images(std::move(out));
}

Permutation commutator(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("commutator: degree mismatch");
  const Permutation ai = inverse(a);
  const Permutation bi = inverse(b);
  std::vector<int> out(static_cast<std::size_t>(a.degree()));
  for (int x = 1; x <= a.degree(); ++x) out[x - 1] = a(b(ai(bi(x))));
  return Permutation::from_images(std::move(out));
}

Permutation conjugate(const Permutation& s, const Permutation& p) {
  if (s.degree() != p.degree())
    throw std::invalid_argument("conjugate: degree mismatch");
  std::vector<int> out(static_cast<std::size_t>(p.degree()));
  for (int x = 1; x <= p.degree(); ++x) out[s(x) - 1] = s(p(x));
  return Permutation::from_images(std::move(out));
}

Permutation power(const Permutation& p, long long n) {
  Permutation base = n < 0 ? inverse(p) : p;
  unsigned long long e =
      n < 0 ? -static_cast<unsigned long long>(n) : static_cast<unsigned long long>(n);
  Permutation acc(p.degree());
  while (e > 0) {
    if (e & 1ull) acc = compose(acc, base);
    base = compose(base, base);
    e >>= 1ull;
  }
  return acc;
}

CycleDecomposition cycle_decomposition(const Permutation& p) {
  CycleDecomposition dec;
  dec.degree = p.degree();
  std::vector<char> seen(static_cast<std::size_t>(p.degree()), 0);
  // Scanning start points in increasing order makes each cycle begin at its
  // smallest element and sorts cycles by smallest element.
  for (int start = 1; start <= p.degree(); ++start) {
    if (seen[start - 1]) continue;
    if (p(start) == start) {
      seen[start - 1] = 1;
      dec.fixed_points.push_back(start);
      continue;
    }
    std::vector<int> cyc{start};
    seen[start - 1] = 1;
    for (int x = p(start); x != start; x = p(x)) {
      seen[x - 1] = 1;
      cyc.push_back(x);
    }
    dec.cycles.push_back(std::move(cyc));
  }
  return dec;
}

std::vector<int> cycle_type(const Permutation& p) {
  std::vector<int> type;
  std::vector<char> seen(static_cast<std::size_t>(p.degree()), 0);
  for (int start = 1; start <= p.degree(); ++start) {
    if (seen[start - 1]) continue;
    int len = 0;
    int x = start;
    do {
      seen[x - 1] = 1;
      ++len;
      x = p(x);
    } while (x != start);
    type.push_back(len);
  }
  std::sort(type.begin(), type.end(), std::greater<int>());
  return type;
}

std::string format_cycles(const CycleDecomposition& dec) {
  if (dec.cycles.empty()) return "()";
  std::string out;
  for (const auto& cyc : dec.cycles) {
    out += '(';
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (i > 0) out += ' ';
      out += std::to_string(cyc[i]);
    }
    out += ')';
  }
  return out;
}

std::string format_cycles(const Permutation& p) {
  return format_cycles(cycle_decomposition(p));
}

namespace {

struct CycleScanner {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() &&
           (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' ||
            text[pos] == '\r'))
      ++pos;
  }

  bool done() {
    skip_ws();
    return pos >= text.size();
  }

  int read_point() {
    skip_ws();
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc() || ptr == text.data() + pos)
      throw parse_error("expected a point number at position " +
                        std::to_string(pos));
    pos = static_cast<std::size_t>(ptr - text.data());
    return value;
  }
};

}  // namespace

Permutation parse_cycles(std::string_view text, int degree) {
  if (degree < 1) throw parse_error("degree must be >= 1");

  CycleScanner sc{text};
  sc.skip_ws();
  // "id" as the whole input denotes the identity.
  if (sc.pos + 2 <= text.size() && text.substr(sc.pos, 2) == "id") {
    CycleScanner rest{text, sc.pos + 2};
    if (!rest.done()) throw parse_error("unexpected text after 'id'");
    return Permutation(degree);
  }

  Permutation result(degree);
  bool saw_cycle = false;
  while (!sc.done()) {
    if (text[sc.pos] != '(')
      throw parse_error("expected '(' at position " + std::to_string(sc.pos));
    ++sc.pos;
    std::vector<int> cyc;
    std::vector<char> in_cycle(static_cast<std::size_t>(degree), 0);
    while (true) {
      sc.skip_ws();
      if (sc.pos >= text.size()) throw parse_error("unterminated cycle");
      if (text[sc.pos] == ')') {
        ++sc.pos;
        break;
      }
      if (text[sc.pos] == ',') {
        ++sc.pos;
        continue;
      }
      int pt = sc.read_point();
      if (pt < 1) throw parse_error("points are 1-based; got " + std::to_string(pt));
      if (pt > degree)
        throw parse_error("point " + std::to_string(pt) + " exceeds degree " +
                          std::to_string(degree));
      if (in_cycle[pt - 1])
        throw parse_error("point " + std::to_string(pt) +
                          " repeated within one cycle");
      in_cycle[pt - 1] = 1;
      cyc.push_back(pt);
    }
    saw_cycle = true;
    if (cyc.size() < 2) continue;  // "()" and singleton cycles act trivially
    std::vector<int> images(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) images[i] = i + 1;
    for (std::size_t i = 0; i < cyc.size(); ++i)
      images[cyc[i] - 1] = cyc[(i + 1) % cyc.size()];
    // Left-to-right fold keeps the product right-to-left: the cycle listed
    // last acts first.
    result = compose(result, Permutation::from_images(std::move(images)));
  }
  if (!saw_cycle) throw parse_error("empty cycle text");
  return result;
}

}  // namespace monocover
