#include "loopideal/invariants.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <vector>

#include "loopideal/covers.hpp"
#include "loopideal/errors.hpp"
#include "loopideal/linquot.hpp"

namespace loopideal {

InvariantReport invariants_by_formula(const FamilyH& h) {
  int n = h.vertex_count();
  InvariantReport r;
  r.n = n;
  r.dim = n - h.core;
  r.pd = h.core + h.max_star() - 1;
  r.depth = n - r.pd;
  r.reg = 1;
  r.source = InvariantSource::kFormula;
  return r;
}

InvariantReport invariants_by_formula(const FamilyKPrime& k) {
  if (!k.loops_within_core())
    throw std::invalid_argument(
        "closed-form invariants need every loop on the complete core");
  int n = k.base.vertex_count();
  InvariantReport r;
  r.n = n;
  r.dim = n - k.base.core;
  r.pd = k.base.core + k.max_looped_star();
  r.depth = n - r.pd;
  r.reg = 1;
  r.source = InvariantSource::kFormula;
  return r;
}

InvariantReport invariants_by_certificate(const MonomialIdeal& I) {
  int n = static_cast<int>(I.vars());
  InvariantReport r;
  r.n = n;
  r.source = InvariantSource::kCertificate;
  if (I.is_zero()) {
    r.dim = n;
    r.pd = 0;
    r.depth = n;
    r.reg = 0;
    return r;
  }
  u64 d = I.gens().front().degree();
  for (const Monomial& g : I.gens())
    if (g.degree() != d)
      throw std::invalid_argument("certificate route needs an equigenerated ideal");
  r.pd = q_of(I) + 1;
  r.dim = n - h_of(I);
  r.depth = n - r.pd;
  r.reg = static_cast<int>(d) - 1;
  return r;
}

int BettiTable::pd() const {
  int best = 0;
  for (const auto& [ij, v] : entries)
    if (v != 0) best = std::max(best, ij.first);
  return best;
}

int BettiTable::reg() const {
  int best = 0;
  for (const auto& [ij, v] : entries)
    if (v != 0) best = std::max(best, ij.second - ij.first);
  return best;
}

long BettiTable::at(int i, int j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? 0 : it->second;
}

std::string BettiTable::str() const {
  int imax = 0, jmax = 0;
  for (const auto& [ij, v] : entries) {
    if (v == 0) continue;
    imax = std::max(imax, ij.first);
    jmax = std::max(jmax, ij.second);
  }
  std::ostringstream out;
  out << "betti (char " << characteristic << "):\n";
  out << "  i\\j";
  for (int j = 0; j <= jmax; ++j) out << '\t' << j;
  out << '\n';
  for (int i = 0; i <= imax; ++i) {
    out << "  " << i;
    for (int j = 0; j <= jmax; ++j) {
      long v = at(i, j);
      out << '\t';
      if (v == 0)
        out << '.';
      else
        out << v;
    }
    out << '\n';
  }
  out << "pd = " << pd() << '\n';
  out << "reg = " << reg() << '\n';
  return out.str();
}

namespace {

// Rank over GF(p) by Gaussian elimination; entries are reduced mod p in place.
int rank_mod_p(std::vector<std::vector<int>>& m, int p) {
  int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] % p != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    // normalize pivot row to 1
    long inv = 1;
    {
      long a = ((m[rank][c] % p) + p) % p, b = 1, e = p - 2;  // Fermat inverse
      while (e) {
        if (e & 1) b = b * a % p;
        a = a * a % p;
        e >>= 1;
      }
      inv = b;
    }
    for (int cc = c; cc < cols; ++cc)
      m[rank][cc] = static_cast<int>((((m[rank][cc] % p) + p) % p) * inv % p);
    for (int r = 0; r < rows; ++r) {
      if (r == rank) continue;
      int f = ((m[r][c] % p) + p) % p;
      if (f == 0) continue;
      for (int cc = c; cc < cols; ++cc)
        m[r][cc] = static_cast<int>(((static_cast<long>(m[r][cc]) -
                                      static_cast<long>(f) * m[rank][cc]) % p + p) % p);
    }
    ++rank;
  }
  return rank;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; static_cast<long>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

BettiTable betti_oracle(const MonomialIdeal& I, int characteristic) {
  if (!is_prime(characteristic))
    throw std::invalid_argument("characteristic must be prime");
  std::size_t t = I.gens().size();
  if (t > 16)
    throw std::invalid_argument("Taylor-complex oracle is limited to 16 generators, got " +
                                std::to_string(t));
  BettiTable table;
  table.characteristic = characteristic;
  if (I.is_unit()) throw std::invalid_argument("Betti oracle is for proper ideals");

  std::size_t n = I.vars();
  const auto& gens = I.gens();
  std::size_t nfaces = std::size_t{1} << t;

  // lcm exponent vector per generator subset, built from the lowest bit
  std::vector<std::vector<u32>> face_lcm(nfaces);
  face_lcm[0].assign(n, 0);
  for (std::size_t mask = 1; mask < nfaces; ++mask) {
    int low = __builtin_ctzll(mask);
    std::size_t rest = mask & (mask - 1);
    face_lcm[mask].resize(n);
    kern::active().vmax(face_lcm[mask].data(), face_lcm[rest].data(),
                        gens[low].exponents().data(), n);
  }

  // group faces into multidegree strands
  std::map<std::vector<u32>, int> strand_of;
  std::vector<std::vector<std::size_t>> strand_faces;
  std::vector<int> strand_id(nfaces);
  for (std::size_t mask = 0; mask < nfaces; ++mask) {
    auto [it, fresh] = strand_of.try_emplace(face_lcm[mask],
                                             static_cast<int>(strand_faces.size()));
    if (fresh) strand_faces.emplace_back();
    strand_id[mask] = it->second;
    strand_faces[it->second].push_back(mask);
  }

  for (const auto& [mdeg, sid] : strand_of) {
    const auto& faces = strand_faces[sid];
    int jdeg = static_cast<int>(kern::active().vsum(mdeg.data(), mdeg.size()));

    // faces by homological degree, with positions for matrix assembly
    std::map<int, std::vector<std::size_t>> by_card;
    for (std::size_t mask : faces) by_card[__builtin_popcountll(mask)].push_back(mask);
    std::map<std::size_t, int> pos;
    for (auto& [card, list] : by_card) {
      std::sort(list.begin(), list.end());
      for (std::size_t k = 0; k < list.size(); ++k) pos[list[k]] = static_cast<int>(k);
    }

    // rank of the boundary map from cardinality i to i-1 within the strand
    std::map<int, int> rank_from;
    for (const auto& [card, list] : by_card) {
      if (card == 0) continue;
      auto below = by_card.find(card - 1);
      if (below == by_card.end() || below->second.empty()) {
        rank_from[card] = 0;
        continue;
      }
      std::vector<std::vector<int>> m(below->second.size(),
                                      std::vector<int>(list.size(), 0));
      for (std::size_t col = 0; col < list.size(); ++col) {
        std::size_t mask = list[col];
        int seen = 0;
        for (std::size_t bit = 0; bit < t; ++bit) {
          if (!(mask & (std::size_t{1} << bit))) continue;
          ++seen;
          std::size_t sub = mask ^ (std::size_t{1} << bit);
          if (strand_id[sub] == sid) {
            int s = (seen % 2 == 1) ? 1 : -1;
            m[pos[sub]][col] = ((s % characteristic) + characteristic) % characteristic;
          }
        }
      }
      rank_from[card] = rank_mod_p(m, characteristic);
    }

    for (const auto& [card, list] : by_card) {
      int r_in = 0;
      auto above = rank_from.find(card + 1);
      if (above != rank_from.end()) r_in = above->second;
      int r_out = card == 0 ? 0 : rank_from[card];
      long betti = static_cast<long>(list.size()) - r_out - r_in;
      if (betti > 0) table.entries[{card, jdeg}] += betti;
    }
  }

  // drop zero entries for a clean table
  for (auto it = table.entries.begin(); it != table.entries.end();)
    it = it->second == 0 ? table.entries.erase(it) : std::next(it);
  return table;
}

InvariantReport invariants_from_betti(const BettiTable& table, const MonomialIdeal& I) {
  int n = static_cast<int>(I.vars());
  InvariantReport r;
  r.n = n;
  r.source = InvariantSource::kBettiOracle;
  r.pd = table.pd();
  r.reg = table.reg();
  r.depth = n - r.pd;
  r.dim = n - h_of(I);
  return r;
}

}  // namespace loopideal
