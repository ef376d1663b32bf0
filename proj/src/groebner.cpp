#include <algorithm>
#include <queue>
#include <tuple>

#include "hhlie/algebra.hpp"
#include "hhlie/errors.hpp"

namespace hhlie {

namespace {

Word concat(const Word& a, const Word& b, const Word& c) {
  Word w;
  w.reserve(a.size() + b.size() + c.size());
  w.insert(w.end(), a.begin(), a.end());
  w.insert(w.end(), b.begin(), b.end());
  w.insert(w.end(), c.begin(), c.end());
  return w;
}

bool occurs_at(const Word& w, const Word& factor, std::size_t offset) {
  return std::equal(factor.begin(), factor.end(), w.begin() + static_cast<std::ptrdiff_t>(offset));
}

// p += c * (u g v)
void add_multiple(const Field& f, Polynomial& p, const Scalar& c, const Word& u,
                  const Polynomial& g, const Word& v) {
  for (const auto& [m, coef] : g) {
    Word w = concat(u, m, v);
    auto [it, inserted] = p.try_emplace(std::move(w), Scalar(0));
    it->second = f.add(it->second, f.mul(c, coef));
    if (it->second == 0) p.erase(it);
  }
}

void make_monic(const Field& f, Polynomial& p) {
  Scalar inv = f.inv(p.rbegin()->second);
  for (auto& [w, c] : p) c = f.mul(c, inv);
}

struct Ambiguity {
  std::size_t length;
  std::size_t i, j, overlap;
  bool operator>(const Ambiguity& o) const {
    return std::tie(length, i, j, overlap) > std::tie(o.length, o.i, o.j, o.overlap);
  }
};

}  // namespace

std::optional<std::size_t> ReductionSystem::find_divisor(const Word& w, std::size_t& offset) const {
  for (std::size_t g = 0; g < gens_.size(); ++g) {
    const Word& lead = gens_[g].rbegin()->first;
    if (lead.size() > w.size()) continue;
    for (std::size_t o = 0; o + lead.size() <= w.size(); ++o) {
      if (occurs_at(w, lead, o)) {
        offset = o;
        return g;
      }
    }
  }
  return std::nullopt;
}

bool ReductionSystem::is_normal(const Word& w) const {
  std::size_t off = 0;
  return !find_divisor(w, off).has_value();
}

Polynomial ReductionSystem::reduce(Polynomial p) const {
  Polynomial out;
  while (!p.empty()) {
    auto top = std::prev(p.end());
    std::size_t off = 0;
    auto g = find_divisor(top->first, off);
    if (!g) {
      out.insert(*top);
      p.erase(top);
      continue;
    }
    const Word w = top->first;
    const Scalar c = field_.neg(top->second);
    const Word& lead = gens_[*g].rbegin()->first;
    Word u(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(off));
    Word v(w.begin() + static_cast<std::ptrdiff_t>(off + lead.size()), w.end());
    add_multiple(field_, p, c, u, gens_[*g], v);
  }
  return out;
}

ReductionSystem ReductionSystem::complete(const Field& f, std::vector<Polynomial> gens,
                                          std::size_t cap) {
  // Live generators are kept in `pool`; retired ones become nullopt so that
  // queued ambiguities can refer to stable indices.
  std::vector<std::optional<Polynomial>> pool;
  std::vector<Polynomial> pending = std::move(gens);
  std::priority_queue<Ambiguity, std::vector<Ambiguity>, std::greater<>> ambiguities;

  auto live_system = [&] {
    ReductionSystem rs(f);
    for (const auto& g : pool)
      if (g) rs.gens_.push_back(*g);
    return rs;
  };

  auto insert = [&](Polynomial r) {
    const Word lead = r.rbegin()->first;
    if (lead.size() > cap)
      throw Error(ErrorKind::not_finite_dimensional,
                  "reduction system needs leading words longer than the cap " + std::to_string(cap));
    const std::size_t k = pool.size();
    // Generators whose leading word contains the new one are re-reduced later.
    for (auto& g : pool) {
      if (!g) continue;
      const Word& gl = g->rbegin()->first;
      if (gl.size() < lead.size()) continue;
      for (std::size_t o = 0; o + lead.size() <= gl.size(); ++o) {
        if (occurs_at(gl, lead, o)) {
          pending.push_back(std::move(*g));
          g.reset();
          break;
        }
      }
    }
    pool.emplace_back(std::move(r));
    for (std::size_t j = 0; j < pool.size(); ++j) {
      if (!pool[j]) continue;
      const Word& wj = pool[j]->rbegin()->first;
      // suffix of the first leading word == prefix of the second
      auto enqueue = [&](std::size_t a, std::size_t b, const Word& wa, const Word& wb) {
        for (std::size_t ov = 1; ov < std::min(wa.size(), wb.size()); ++ov)
          if (std::equal(wa.end() - static_cast<std::ptrdiff_t>(ov), wa.end(), wb.begin()))
            ambiguities.push(Ambiguity{wa.size() + wb.size() - ov, a, b, ov});
      };
      enqueue(k, j, lead, wj);
      if (j != k) enqueue(j, k, wj, lead);
    }
  };

  while (true) {
    while (!pending.empty()) {
      Polynomial p = std::move(pending.back());
      pending.pop_back();
      Polynomial r = live_system().reduce(std::move(p));
      if (r.empty()) continue;
      make_monic(f, r);
      insert(std::move(r));
    }
    if (ambiguities.empty()) break;
    Ambiguity amb = ambiguities.top();
    ambiguities.pop();
    if (!pool[amb.i] || !pool[amb.j]) continue;
    const Polynomial& gi = *pool[amb.i];
    const Polynomial& gj = *pool[amb.j];
    const Word& wi = gi.rbegin()->first;
    const Word& wj = gj.rbegin()->first;
    Word v(wj.begin() + static_cast<std::ptrdiff_t>(amb.overlap), wj.end());
    Word u(wi.begin(), wi.end() - static_cast<std::ptrdiff_t>(amb.overlap));
    Polynomial s;
    add_multiple(f, s, Scalar(1), {}, gi, v);
    add_multiple(f, s, f.neg(Scalar(1)), u, gj, {});
    if (!s.empty()) pending.push_back(std::move(s));
  }

  // Tail-reduce so every generator is written in normal monomials below its lead.
  ReductionSystem rs = live_system();
  for (std::size_t g = 0; g < rs.gens_.size(); ++g) {
    Polynomial tail = rs.gens_[g];
    auto lead = *tail.rbegin();
    tail.erase(std::prev(tail.end()));
    Polynomial reduced = rs.reduce(std::move(tail));
    reduced.insert(lead);
    rs.gens_[g] = std::move(reduced);
  }
  std::sort(rs.gens_.begin(), rs.gens_.end(), [](const Polynomial& a, const Polynomial& b) {
    return DegLexLess{}(a.rbegin()->first, b.rbegin()->first);
  });
  return rs;
}

}  // namespace hhlie
