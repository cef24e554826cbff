#include "hlbc/fillings.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hlbc {

HatShape shape_of(const LambdaChain& chain) {
  HatShape shape;
  shape.type = chain.type;
  shape.n = chain.n;
  shape.parts = chain.parts;
  for (const Segment& s : chain.segments)
    if (s.records_column) shape.cols.push_back({s.group, s.kind, s.index, s.height});
  return shape;
}

HatShape hat_shape(LieType type, int n, const std::vector<int>& parts) {
  return shape_of(lambda_chain(type, n, parts));
}

Filling filling_map(const SignedPerm& w, const std::vector<int>& positions,
                    const LambdaChain& chain) {
  std::vector<int> J = positions;
  std::sort(J.begin(), J.end());
  Filling f;
  SignedPerm pi = w;
  std::size_t seg_i = 0;
  std::size_t j_i = 0;
  for (std::size_t k = 0; k <= chain.size(); ++k) {
    while (seg_i < chain.segments.size() && chain.segments[seg_i].begin == k) {
      const Segment& s = chain.segments[seg_i];
      if (s.records_column)
        f.emplace_back(pi.window.begin(), pi.window.begin() + s.height);
      ++seg_i;
    }
    if (k == chain.size()) break;
    if (j_i < J.size() && J[j_i] == static_cast<int>(k) + 1) {
      pi = apply_reflection(pi, chain.pos[k].root.refl);
      ++j_i;
    }
  }
  return f;
}

namespace {

// Apply the signed cycle (r_1,-idx)...(r_p,-idx) to a column, left to right.
Column apply_cycle(const Column& D, const std::vector<int>& cycle, int idx) {
  Column E = D;
  for (int r : cycle) {
    Letter& a = E[static_cast<std::size_t>(r) - 1];
    Letter& b = E[static_cast<std::size_t>(idx) - 1];
    const Letter old_a = a;
    a = b.bar();
    b = old_a.bar();
  }
  return E;
}

Column reapply(const Column& D, const Transition& t, int idx, const Column& Cc) {
  Column E = apply_cycle(D, t.cycle, idx);
  if (t.trailing) E[static_cast<std::size_t>(idx) - 1] = E[static_cast<std::size_t>(idx) - 1].bar();
  if (t.drop) E[static_cast<std::size_t>(idx) - 1] = Cc[static_cast<std::size_t>(idx) - 1];
  return E;
}

}  // namespace

Transition transition_decompose(const Column& D, const Column& C, const ColumnDesc& left,
                                LieType type, int n) {
  const int h = static_cast<int>(D.size());
  const int idx = left.index;
  if (idx < 1 || idx > h) throw std::invalid_argument("transition index outside the column");
  if (static_cast<int>(C.size()) != h && static_cast<int>(C.size()) != h + 1)
    throw std::domain_error("no legal transition: neighbor height differs by more than one");
  const Column Cc(C.begin(), C.begin() + h);

  Transition t;
  for (int r = 1; r < idx; ++r)
    if (Cc[static_cast<std::size_t>(r) - 1] != D[static_cast<std::size_t>(r) - 1])
      t.cycle.push_back(r);
  for (int r = idx + 1; r <= h; ++r)
    if (Cc[static_cast<std::size_t>(r) - 1] != D[static_cast<std::size_t>(r) - 1])
      throw std::domain_error("no legal transition: change below the index position");

  const Column Dp = apply_cycle(D, t.cycle, idx);
  for (int r = 1; r < idx; ++r)
    if (Dp[static_cast<std::size_t>(r) - 1] != Cc[static_cast<std::size_t>(r) - 1])
      throw std::domain_error("no legal transition: not a signed cycle");

  const Letter at_idx = Cc[static_cast<std::size_t>(idx) - 1];
  const Letter cyc_idx = Dp[static_cast<std::size_t>(idx) - 1];
  if (left.kind == SegKind::Primed) {
    if (at_idx == cyc_idx) {
      t.case_tag = t.cycle.empty() ? 0 : (t.cycle.size() == 1 ? 1 : 2);
    } else if (type == LieType::B && at_idx == cyc_idx.bar() && !at_idx.barred()) {
      t.trailing = true;
      t.case_tag = 4;
    } else {
      throw std::domain_error("no legal primed transition at the index position");
    }
  } else {
    if (at_idx == cyc_idx) {
      t.case_tag = t.cycle.empty() ? 0 : (t.cycle.size() == 1 ? 1 : 2);
    } else if (letter_lt(at_idx, cyc_idx, n)) {
      for (int r = 1; r <= h; ++r)
        if (r != idx && Dp[static_cast<std::size_t>(r) - 1].abs() == at_idx.abs())
          throw std::domain_error("no legal transition: dropped value collides");
      t.drop = true;
      t.case_tag = 3;
    } else {
      throw std::domain_error("no legal unprimed transition: value rises at the index");
    }
  }

  if (reapply(D, t, idx, Cc) != Cc) throw std::domain_error("transition re-application failed");
  return t;
}

namespace {

// t-exponent contribution of one signed-transposition step (r,-idx) out of D.
int cycle_step_count(const Column& D, int r, int idx, int n) {
  const Letter a = D[static_cast<std::size_t>(r) - 1];
  const Letter b = D[static_cast<std::size_t>(idx) - 1];
  const Word mid(D.begin() + r, D.begin() + (idx - 1));
  const Word prefix(D.begin(), D.begin() + idx);
  int v = count_between(mid, b.bar(), a, n);
  v += count_interval_excluding(b.bar(), a, prefix, n);
  if (a.barred() && b.barred()) ++v;
  return v;
}

}  // namespace

HalfInt stat_N_pair(const Column& D, const Column& C, const ColumnDesc& left, LieType type,
                    int n) {
  const Transition t = transition_decompose(D, C, left, type, n);
  const int idx = left.index;
  const int h = static_cast<int>(D.size());

  int twice = 0;
  Column cur = D;
  for (int r : t.cycle) {
    twice += 2 * cycle_step_count(cur, r, idx, n);
    cur = apply_cycle(cur, {r}, idx);
  }
  if (t.drop) {
    const Word tail(D.begin() + idx, D.begin() + h);
    twice += 2 * count_between(tail, C[static_cast<std::size_t>(idx) - 1],
                               cur[static_cast<std::size_t>(idx) - 1], n);
  }
  if (t.trailing) {
    const Letter a = cur[static_cast<std::size_t>(idx) - 1];
    const Word prefix(cur.begin(), cur.begin() + idx);
    twice += count_interval_excluding(a.bar(), a, prefix, n);
  }
  return HalfInt{twice};
}

int stat_des_pair(const Column& D, const Column& C, const ColumnDesc& left, LieType type,
                  int n) {
  const Transition t = transition_decompose(D, C, left, type, n);
  return static_cast<int>(t.cycle.size()) + (t.drop ? 1 : 0) + (t.trailing ? 1 : 0);
}

int stat_N(const HatShape& shape, const Filling& f) {
  if (static_cast<int>(f.size()) != shape.num_cols())
    throw std::invalid_argument("filling does not match the shape");
  HalfInt tot;
  for (std::size_t c = 0; c + 1 < f.size(); ++c)
    tot += stat_N_pair(f[c], f[c + 1], shape.cols[c], shape.type, shape.n);
  tot.twice += 2 * ell_plus_column(f.back(), shape.n);
  if (!tot.integral()) throw std::domain_error("non-integral N statistic");
  return tot.twice / 2;
}

int stat_des(const HatShape& shape, const Filling& f) {
  int tot = 0;
  for (std::size_t c = 0; c + 1 < f.size(); ++c)
    tot += stat_des_pair(f[c], f[c + 1], shape.cols[c], shape.type, shape.n);
  return tot;
}

bool filling_ok(const HatShape& shape, const Filling& f, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (static_cast<int>(f.size()) != shape.num_cols()) return fail("column count mismatch");
  for (std::size_t c = 0; c < f.size(); ++c) {
    if (static_cast<int>(f[c].size()) != shape.cols[c].height)
      return fail("column " + std::to_string(c + 1) + " has the wrong height");
    for (Letter x : f[c])
      if (x.val == 0 || x.abs() > shape.n)
        return fail("column " + std::to_string(c + 1) + " letter out of range");
    if (!distinct_abs(f[c]))
      return fail("column " + std::to_string(c + 1) + " repeats an absolute value");
  }
  for (std::size_t c = 0; c + 1 < f.size(); ++c) {
    const Column& D = f[c];
    const Column& C = f[c + 1];
    for (std::size_t r = 0; r < D.size() && r < C.size(); ++r)
      if (letter_lt(D[r], C[r], shape.n))
        return fail("row " + std::to_string(r + 1) + " increases into column " +
                    std::to_string(c + 2));
    try {
      transition_decompose(D, C, shape.cols[c], shape.type, shape.n);
    } catch (const std::domain_error& e) {
      return fail("columns " + std::to_string(c + 1) + "->" + std::to_string(c + 2) + ": " +
                  e.what());
    }
  }
  return true;
}

namespace {

void seed_columns(int height, int n, Column& cur, std::vector<Column>& out) {
  if (static_cast<int>(cur.size()) == height) {
    out.push_back(cur);
    return;
  }
  for (int key = 1; key <= 2 * n; ++key) {
    const Letter x = letter_from_key(key, n);
    bool used = false;
    for (Letter y : cur)
      if (y.abs() == x.abs()) used = true;
    if (used) continue;
    cur.push_back(x);
    seed_columns(height, n, cur, out);
    cur.pop_back();
  }
}

// All columns reachable from D under the transition rule of `left`, already
// filtered for weak row decrease and column validity, extended with every
// admissible bottom letter when the right column is taller by one.
std::vector<Column> enumerate_transitions(const Column& D, const ColumnDesc& left,
                                          int next_height, LieType type, int n) {
  const int h = static_cast<int>(D.size());
  const int idx = left.index;
  std::vector<Column> raw;

  const int masks = 1 << (idx - 1);
  for (int mask = 0; mask < masks; ++mask) {
    std::vector<int> cycle;
    for (int r = 1; r < idx; ++r)
      if (mask & (1 << (r - 1))) cycle.push_back(r);
    const Column Dp = apply_cycle(D, cycle, idx);
    raw.push_back(Dp);
    if (left.kind == SegKind::Primed) {
      if (type == LieType::B) {
        Column F = Dp;
        Letter& at = F[static_cast<std::size_t>(idx) - 1];
        at = at.bar();
        if (!at.barred()) raw.push_back(F);
      }
      continue;
    }
    // unprimed: any strictly smaller value at the index position that does
    // not collide with the other entries
    const Letter top = Dp[static_cast<std::size_t>(idx) - 1];
    for (int key = 1; key < order_key(top, n); ++key) {
      const Letter v = letter_from_key(key, n);
      bool collide = false;
      for (int r = 1; r <= h; ++r)
        if (r != idx && Dp[static_cast<std::size_t>(r) - 1].abs() == v.abs()) collide = true;
      if (collide) continue;
      Column F = Dp;
      F[static_cast<std::size_t>(idx) - 1] = v;
      raw.push_back(F);
    }
  }

  std::vector<Column> ok;
  for (const Column& E : raw) {
    bool mono = true;
    for (int r = 0; r < h; ++r)
      if (letter_lt(D[static_cast<std::size_t>(r)], E[static_cast<std::size_t>(r)], n)) {
        mono = false;
        break;
      }
    if (mono && distinct_abs(E)) ok.push_back(E);
  }

  if (next_height == h) return ok;
  if (next_height != h + 1) throw std::logic_error("heights must step by at most one");
  std::vector<Column> taller;
  for (const Column& E : ok)
    for (int key = 1; key <= 2 * n; ++key) {
      const Letter x = letter_from_key(key, n);
      bool used = false;
      for (Letter y : E)
        if (y.abs() == x.abs()) used = true;
      if (used) continue;
      Column F = E;
      F.push_back(x);
      taller.push_back(F);
    }
  return taller;
}

}  // namespace

std::vector<Filling> enumerate_fillings(const HatShape& shape) {
  std::vector<Filling> out;
  const int m = shape.num_cols();
  if (m == 0) return out;
  Filling cur;
  auto rec = [&](auto&& self, int c) -> void {
    if (c == m) {
      out.push_back(cur);
      return;
    }
    if (c == 0) {
      std::vector<Column> seeds;
      Column scratch;
      seed_columns(shape.cols[0].height, shape.n, scratch, seeds);
      for (const Column& s : seeds) {
        cur.push_back(s);
        self(self, 1);
        cur.pop_back();
      }
      return;
    }
    for (const Column& E :
         enumerate_transitions(cur.back(), shape.cols[static_cast<std::size_t>(c) - 1],
                               shape.cols[static_cast<std::size_t>(c)].height, shape.type,
                               shape.n)) {
      cur.push_back(E);
      self(self, c + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

Filling compress(const HatShape& shape, const Filling& f) {
  Filling out;
  std::size_t c = 0;
  while (c < f.size()) {
    const int group = shape.cols[c].group;
    std::size_t e = c;
    while (e < f.size() && shape.cols[e].group == group) ++e;
    const bool single = shape.type == LieType::B && shape.cols[c].height == shape.n;
    if (single) {
      out.push_back(f[c]);
    } else {
      std::size_t head = c, tail = c;
      bool head_found = false, tail_found = false;
      for (std::size_t i = c; i < e; ++i) {
        if (!head_found && shape.cols[i].kind == SegKind::Primed) {
          head = i;
          head_found = true;
        }
        if (!tail_found && shape.cols[i].kind == SegKind::Unprimed) {
          tail = i;
          tail_found = true;
        }
      }
      if (!head_found) head = tail;  // a group with no primed copies doubles its column
      out.push_back(f[head]);
      out.push_back(f[tail]);
    }
    c = e;
  }
  return out;
}

WeightVec content(const HatShape& shape, const Filling& f) {
  const Filling comp = compress(shape, f);
  WeightVec ct = WeightVec::zero(shape.n);
  for (const Column& col : comp)
    for (Letter x : col) ct.d[static_cast<std::size_t>(x.abs()) - 1] += x.barred() ? -1 : 1;
  return ct;
}

InvStats inversion_stats(const std::vector<Column>& tau, int n) {
  InvStats s;
  int pairs_total = 0;
  for (std::size_t c = 0; c < tau.size(); ++c) {
    if (c + 1 < tau.size() && tau[c].size() > tau[c + 1].size())
      throw std::invalid_argument("column heights must weakly increase left to right");
    const int h = static_cast<int>(tau[c].size());
    pairs_total += h * (h - 1) / 2;
    // same-column attacking pairs: upper entry smaller
    for (int i = 0; i < h; ++i)
      for (int j = i + 1; j < h; ++j)
        if (letter_lt(tau[c][static_cast<std::size_t>(i)], tau[c][static_cast<std::size_t>(j)], n))
          ++s.inv;
    // adjacent-column attacking pairs: lower-left smaller than upper-right
    if (c > 0) {
      const Column& L = tau[c - 1];
      for (int i = 0; i < static_cast<int>(L.size()); ++i)
        for (int j = i + 1; j < static_cast<int>(L.size()); ++j)
          if (letter_lt(L[static_cast<std::size_t>(j)], tau[c][static_cast<std::size_t>(i)], n))
            ++s.inv;
    }
    // row descents against the right neighbor
    if (c + 1 < tau.size())
      for (std::size_t r = 0; r < tau[c].size(); ++r)
        if (letter_lt(tau[c + 1][r], tau[c][r], n)) ++s.des;
  }
  s.cinv = pairs_total - s.inv;
  return s;
}

int cinv_triples(const std::vector<Column>& tau, int n) {
  // the triple form needs distinct attacking entries and weakly decreasing rows
  for (std::size_t c = 0; c < tau.size(); ++c) {
    if (!distinct_abs(tau[c])) throw std::invalid_argument("repeated entry inside a column");
    if (c == 0) continue;
    const Column& L = tau[c - 1];
    const Column& R = tau[c];
    if (L.size() > R.size())
      throw std::invalid_argument("column heights must weakly increase left to right");
    for (std::size_t r = 0; r < L.size(); ++r)
      if (letter_lt(L[r], R[r], n)) throw std::invalid_argument("rows must weakly decrease");
    for (std::size_t i = 0; i < L.size(); ++i)
      for (std::size_t j = i + 1; j < L.size(); ++j)
        if (L[j] == R[i]) throw std::invalid_argument("attacking cells coincide");
  }
  int cnt = 0;
  for (std::size_t c = 0; c < tau.size(); ++c) {
    const Column& R = tau[c];
    const Column* L = (c > 0) ? &tau[c - 1] : nullptr;
    const int h = static_cast<int>(R.size());
    for (int i = 0; i < h; ++i)
      for (int j = i + 1; j < h; ++j) {
        const Letter a = R[static_cast<std::size_t>(j)];
        const Letter b = R[static_cast<std::size_t>(i)];
        if (!letter_lt(a, b, n)) continue;
        if (L && j < static_cast<int>(L->size())) {
          if (letter_lt(b, (*L)[static_cast<std::size_t>(j)], n)) ++cnt;
        } else {
          ++cnt;  // third cell outside the shape
        }
      }
  }
  return cnt;
}

std::vector<Filling> kn_fillings(const HatShape& shape) {
  std::vector<Filling> out;
  for (const Filling& f : enumerate_fillings(shape))
    if (stat_N(shape, f) == 0) out.push_back(f);
  return out;
}

std::string render_filling(const HatShape& shape, const Filling& f) {
  int max_h = 0;
  for (const ColumnDesc& c : shape.cols) max_h = std::max(max_h, c.height);
  std::size_t width = 2;
  for (const Column& c : f)
    for (Letter x : c) width = std::max(width, to_string(x).size());
  std::ostringstream os;
  for (int r = 0; r < max_h; ++r) {
    for (std::size_t c = 0; c < f.size(); ++c) {
      std::string cell =
          r < static_cast<int>(f[c].size()) ? to_string(f[c][static_cast<std::size_t>(r)]) : "";
      cell.resize(width, ' ');
      os << cell;
      if (c + 1 < f.size()) os << ' ';
    }
    os << '\n';
  }
  return os.str();
}

nlohmann::json filling_to_json(const Filling& f) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Column& c : f) {
    nlohmann::json col = nlohmann::json::array();
    for (Letter x : c) col.push_back(x.val);
    arr.push_back(std::move(col));
  }
  return arr;
}

std::string filling_key(const Filling& f) {
  std::string s;
  for (const Column& c : f) {
    for (Letter x : c) s += std::to_string(x.val) + ",";
    s += ";";
  }
  return s;
}

}  // namespace hlbc
