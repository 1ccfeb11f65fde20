#include "knotspan/bracket.hpp"

#include "knotspan/states.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace knotspan {

namespace {

// delta = -A^2 - A^{-2}
Laurent1 bracket_delta() {
  return Laurent1::monomial(2, -1) + Laurent1::monomial(-2, -1);
}

}  // namespace

Laurent1 kauffman_bracket(const LinkDiagram& d) {
  int c = d.crossing_count();
  if (c > kBracketCrossingLimit)
    throw std::invalid_argument(
        "kauffman_bracket: crossing count exceeds the state-sum limit of " +
        std::to_string(kBracketCrossingLimit));

  if (c == 0) return bracket_delta().pow(static_cast<unsigned>(d.freeLoops - 1));

  int n = 2 * c;  // edge labels 1..n
  // States grouped by (#B smoothings, circle count): the contribution of a
  // state depends only on that pair. Counts fit in 64 bits for c <= 24.
  std::vector<std::vector<std::uint64_t>> groups(
      c + 1, std::vector<std::uint64_t>(n + 1, 0));

  std::vector<int> parent(n + 1);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << c); ++mask) {
    for (int l = 1; l <= n; ++l) parent[l] = l;
    int circles = n;
    auto unite = [&](int a, int b) {
      a = find(a);
      b = find(b);
      if (a != b) {
        parent[a] = b;
        --circles;
      }
    };
    int nb = 0;
    for (int i = 0; i < c; ++i) {
      const auto& e = d.crossings[i].end;
      if (mask >> i & 1u) {  // B: join {a,d}, {b,c}
        unite(e[0], e[3]);
        unite(e[1], e[2]);
        ++nb;
      } else {  // A: join {a,b}, {c,d}
        unite(e[0], e[1]);
        unite(e[2], e[3]);
      }
    }
    ++groups[nb][circles];
  }

  Laurent1 delta = bracket_delta();
  std::vector<Laurent1> deltaPow(n + d.freeLoops);
  deltaPow[0] = Laurent1(BigInt(1));
  for (int k = 1; k < static_cast<int>(deltaPow.size()); ++k)
    deltaPow[k] = deltaPow[k - 1] * delta;

  Laurent1 result;
  for (int nb = 0; nb <= c; ++nb)
    for (int k = 1; k <= n; ++k) {
      std::uint64_t count = groups[nb][k];
      if (!count) continue;
      Laurent1 term = deltaPow[k - 1 + d.freeLoops].shifted(c - 2 * nb);
      for (const auto& [e, co] : term.terms())
        result.add_term(e, co * BigInt(count));
    }
  return result;
}

JonesPoly jones(const LinkDiagram& d) {
  Laurent1 br = kauffman_bracket(d);
  int w = writhe(d);
  // V = (-A^3)^{-w} <D> with A = q^{-1}: exponent e maps to 3w - e in q,
  // with a global sign (-1)^w.
  JonesPoly v;
  for (const auto& [e, co] : br.terms())
    v.q.add_term(3 * w - e, (w % 2 == 0) ? co : -co);
  return v;
}

int span_jones(const LinkDiagram& d) {
  Laurent1 br = kauffman_bracket(d);
  int s = br.span();
  if (s % 4 != 0) throw std::logic_error("bracket span not divisible by 4");
  return s / 4;
}

BracketReport bracket_report(const LinkDiagram& d) {
  BracketReport r;
  r.bracket = kauffman_bracket(d);
  int c = d.crossing_count();
  int sa = resolve_all(d, Side::A).circleCount;
  int sb = resolve_all(d, Side::B).circleCount;
  r.M = c + 2 * sa - 2;
  r.m = -c - 2 * sb + 2;
  r.aM = r.bracket.coeff(r.M);
  r.am = r.bracket.coeff(r.m);
  r.spanBracket = r.bracket.span();
  return r;
}

}  // namespace knotspan
