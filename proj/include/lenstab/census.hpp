#pragma once
// Tabulation pipeline: enumerate canonical marked diagrams, partition them by
// the framed bracket invariant, and merge isotopic diagrams by move search.
#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lenstab/code.hpp"
#include "lenstab/diagram.hpp"
#include "lenstab/hsm.hpp"
#include "lenstab/kbsm.hpp"
#include "lenstab/moves.hpp"

namespace lenstab {

// ---- enumeration ----

struct SignedWord {
  std::vector<int> word;   // +k over / -k under, each label once per sense
  std::vector<int> signs;  // crossing signs by label
};

// canonical form: minimum over traversal starts and directions, crossings
// renamed in order of first appearance
inline SignedWord word_canonical(const std::vector<int>& w, const std::vector<int>& s) {
  int len = (int)w.size(), n = len / 2;
  SignedWord best;
  bool have = false;
  std::vector<int> rn(n + 1);
  for (int dir : {1, -1}) {
    for (int st = 0; st < len; st++) {
      std::fill(rn.begin(), rn.end(), 0);
      int next = 1;
      SignedWord cand;
      cand.word.resize(len);
      cand.signs.resize(n);
      for (int i = 0; i < len; i++) {
        int let = w[((st + dir * i) % len + len) % len];
        int k = std::abs(let);
        if (!rn[k]) {
          rn[k] = next++;
          cand.signs[rn[k] - 1] = s[k - 1];
        }
        cand.word[i] = let > 0 ? rn[k] : -rn[k];
      }
      if (!have) {
        best = std::move(cand);
        have = true;
        continue;
      }
      bool less = false, decided = false;
      for (int i = 0; i < len && !decided; i++) {
        int a = letter_rank(cand.word[i]), b = letter_rank(best.word[i]);
        if (a != b) { less = a < b; decided = true; }
      }
      for (int i = 0; i < n && !decided; i++) {
        int a = cand.signs[i] < 0, b = best.signs[i] < 0;
        if (a != b) { less = a < b; decided = true; }
      }
      if (decided && less) best = std::move(cand);
    }
  }
  return best;
}

// all canonical realizable signed words with n crossings, in order
inline std::vector<SignedWord> canonical_words(int n) {
  std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
  std::vector<int> w(2 * n);
  std::vector<int> open_sense;  // sense of the first occurrence per label
  std::function<void(int, int)> rec = [&](int pos, int opened) {
    if (pos == 2 * n) {
      std::vector<int> s(n, 1);
      for (int sm = 0; sm < (1 << n); sm++) {
        for (int k = 0; k < n; k++) s[k] = (sm >> k & 1) ? -1 : 1;
        if (!word_realizable(w, s)) continue;
        SignedWord c = word_canonical(w, s);
        seen.insert({c.word, c.signs});
      }
      return;
    }
    // close any open label
    for (int k = 1; k <= opened; k++) {
      bool still_open = false;
      for (int i = 0; i < pos; i++)
        if (std::abs(w[i]) == k) still_open = !still_open;
      if (!still_open) continue;
      w[pos] = -open_sense[k - 1] * k;
      rec(pos + 1, opened);
    }
    // open the next label, in either sense
    if (opened < n) {
      for (int sense : {1, -1}) {
        open_sense.resize(opened + 1);
        open_sense[opened] = sense;
        w[pos] = sense * (opened + 1);
        rec(pos + 1, opened + 1);
      }
    }
  };
  rec(0, 0);
  std::vector<SignedWord> out;
  out.reserve(seen.size());
  for (auto& p : seen) out.push_back({p.first, p.second});
  return out;
}

struct LevelCounts {
  long canonical_words = 0;  // canonical realizable signed words
  long extended = 0;         // canonical marked codes
  long census = 0;           // after the affine / adjacent-region filters
};

// all canonical marked codes with n >= 1 crossings; census-eligible ones
// (marked regions distinct and non-adjacent) are appended to census_out
inline LevelCounts enumerate_level(int n, std::vector<GaussCode>* census_out) {
  LevelCounts lc;
  for (const SignedWord& sw : canonical_words(n)) {
    lc.canonical_words++;
    Diagram d = map_from_word(sw.word, sw.signs);
    Faces f = trace_faces(d);
    std::set<std::string> local;
    for (int zf = 0; zf < f.count(); zf++) {
      for (int inf = 0; inf < f.count(); inf++) {
        d.zero_dart = f.dartss[zf][0];
        d.inf_dart = f.dartss[inf][0];
        GaussCode c = canonical_code(d);
        if (!local.insert(format_code(c)).second) continue;
        lc.extended++;
        if (classify_regions(d) == RegionClass::Proper) {
          lc.census++;
          if (census_out) census_out->push_back(c);
        }
      }
    }
  }
  return lc;
}

// census input through n_max: the crossingless non-affine unknot plus every
// canonical marked code with distinct, non-adjacent marked regions; sorted
inline std::vector<GaussCode> enumerate_census(int n_max,
                                               std::vector<LevelCounts>* stats = nullptr) {
  std::vector<GaussCode> out;
  out.push_back(core_unknot_code());
  if (stats) stats->assign(n_max + 1, LevelCounts{});
  for (int n = 1; n <= n_max; n++) {
    LevelCounts lc = enumerate_level(n, &out);
    if (stats) (*stats)[n] = lc;
  }
  std::sort(out.begin(), out.end(), CodeLess{});
  return out;
}

// ---- connected sums ----

// insert `factor` (an unmarked diagram) into the edge of `host` holding
// `host_dart`; marks stay with the host
inline Diagram splice_sum(const Diagram& host, const Diagram& factor, int host_dart,
                          int factor_dart) {
  if (host.n == 0 || factor.n == 0) throw std::invalid_argument("splice needs crossings");
  Diagram r;
  r.n = host.n + factor.n;
  r.n0_core = false;
  r.theta.resize(r.darts());
  r.over02 = host.over02;
  r.over02.insert(r.over02.end(), factor.over02.begin(), factor.over02.end());
  int off = 4 * host.n;
  for (int x = 0; x < 4 * host.n; x++) r.theta[x] = host.theta[x];
  for (int x = 0; x < 4 * factor.n; x++) r.theta[off + x] = off + factor.theta[x];
  int u = host_dart, v = host.theta[host_dart];
  int s = off + factor_dart, t = off + factor.theta[factor_dart];
  r.theta[u] = s;
  r.theta[s] = u;
  r.theta[v] = t;
  r.theta[t] = v;
  r.zero_dart = host.zero_dart;
  r.inf_dart = host.inf_dart;
  return r;
}

// prime null-homotopic factors that can appear inside a 5-crossing sum
inline std::vector<Diagram> affine_prime_factors(int n_max) {
  std::vector<Diagram> out;
  if (n_max >= 4) {
    out.push_back(map_from_word({1, -2, 3, -1, 2, -3}, {1, 1, 1}));
    out.push_back(map_from_word({1, -2, 3, -1, 2, -3}, {-1, -1, -1}));
  }
  if (n_max >= 5)
    out.push_back(map_from_word({1, -2, 3, -4, 2, -1, 4, -3}, {-1, -1, 1, 1}));
  return out;
}

// ---- classification ----

struct CensusOptions {
  int n_max = 5;
  int headroom = 2;        // extra crossings allowed during move search
  long quick_cap = 600;    // expanded nodes per first-pass flood
  long deep_cap = 60000;   // expanded nodes per contested-partition flood
};

enum class ClassStatus {
  Prime,        // counted in the table
  Composite,    // merged with a constructed connected sum
  AffineSum,    // reaches a code whose marked regions coincide or are adjacent
};

struct KnotClass {
  GaussCode rep;          // least member code
  int nmin = 0;           // crossing number: least n among merged members
  int members = 0;
  ClassStatus status = ClassStatus::Prime;
  int mirror_class = -1;  // index into CensusReport::classes
  bool amphichiral = false;
  std::string key;        // framed bracket invariant
};

struct CensusReport {
  int n_max = 0;
  std::vector<KnotClass> classes;
  std::vector<long> prime_per_n;   // indexed by crossing number
  std::vector<long> pairs_per_n;   // mirror pairs among primes
  std::vector<long> amphi_per_n;   // amphichiral primes
  // distinct primes sharing the framed bracket key
  std::vector<std::pair<GaussCode, GaussCode>> shared_key_pairs;
  // subset still sharing the oriented skein value too (resolved externally)
  std::vector<std::pair<GaussCode, GaussCode>> unresolved_pairs;
  long capped_floods = 0;          // floods that hit their node cap unresolved
  long unattached_sums = 0;        // constructed sums that met no member
};

namespace census_detail {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { for (int i = 0; i < n; i++) p[i] = i; }
  int find(int x) { while (p[x] != x) x = p[x] = p[p[x]]; return x; }
  // keep the smaller index as the root (members are sorted by code order)
  bool join(int a, int b) {
    a = find(a); b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    p[b] = a;
    return true;
  }
};

// queue of raw diagrams bucketed by crossing count: cheap best-first order
struct BucketQueue {
  std::vector<std::vector<Diagram>> buckets;
  long size = 0;
  explicit BucketQueue(int max_n) : buckets(max_n + 1) {}
  void push(const Diagram& d) {
    if (d.n < (int)buckets.size()) { buckets[d.n].push_back(d); size++; }
  }
  bool pop(Diagram& out) {
    for (auto& b : buckets)
      if (!b.empty()) { out = std::move(b.back()); b.pop_back(); size--; return true; }
    return false;
  }
  void clear() { for (auto& b : buckets) b.clear(); size = 0; }
};

}  // namespace census_detail

inline CensusReport classify_T(const CensusOptions& opt = {}) {
  using census_detail::BucketQueue;
  using census_detail::UnionFind;

  std::vector<GaussCode> members = enumerate_census(opt.n_max);
  int nm = (int)members.size();
  std::unordered_map<std::string, int> member_id;
  member_id.reserve(nm * 2);
  for (int i = 0; i < nm; i++) member_id[format_code(members[i])] = i;

  // partition by the framed bracket invariant
  std::vector<std::string> keys(nm);
  std::map<std::string, std::vector<int>> parts;
  for (int i = 0; i < nm; i++) {
    keys[i] = normalized_T(members[i]).str();
    parts[keys[i]].push_back(i);  // members sorted => ids ascend per part
  }

  UnionFind uf(nm);
  std::vector<uint8_t> affine_flag(nm, 0);  // root reaches affine/adjacent code
  std::vector<uint8_t> core_flag(nm, 0);    // root holds the crossingless unknot
  {
    auto it = member_id.find(format_code(core_unknot_code()));
    if (it != member_id.end()) core_flag[it->second] = 1;
  }
  CensusReport rep;
  rep.n_max = opt.n_max;

  int bound_all = opt.n_max + opt.headroom;

  // merge two classes, keeping flags; true if they were distinct
  auto join_roots = [&](int a, int b) {
    a = uf.find(a);
    b = uf.find(b);
    if (a == b) return false;
    uint8_t af = affine_flag[a] | affine_flag[b];
    uint8_t cf = core_flag[a] | core_flag[b];
    uf.join(a, b);
    int r = uf.find(a);
    affine_flag[r] = af;
    core_flag[r] = cf;
    return true;
  };

  // flood from one member until it merges with another class or exhausts its
  // node budget; visited maps canonical code -> owner member, shared per
  // partition so later floods stop on first contact with earlier territory
  auto flood = [&](int mid, long cap, std::unordered_map<std::string, int>& visited) {
    int bound = std::min(bound_all, members[mid].crossings() + opt.headroom);
    BucketQueue q(bound);
    q.push(from_code(members[mid]));
    long expanded = 0;
    Diagram d;
    while (q.pop(d)) {
      GaussCode c = canonical_code(d);
      std::string cs = format_code(c);
      auto mit = member_id.find(cs);
      if (mit != member_id.end() && mit->second != mid) {
        if (join_roots(mit->second, mid)) return true;
      }
      auto vit = visited.find(cs);
      if (vit != visited.end()) {
        if (join_roots(vit->second, mid)) return true;
        continue;  // already expanded within this class
      }
      visited[cs] = mid;
      if (++expanded > cap) { rep.capped_floods++; return false; }
      move_neighbors(from_code(c), bound, [&](const Diagram& r) {
        if (r.n == 0) {
          if (!r.n0_core) { affine_flag[uf.find(mid)] = 1; return; }
        } else if (classify_regions(r) != RegionClass::Proper) {
          affine_flag[uf.find(mid)] = 1;
        }
        q.push(r);
      });
    }
    return false;
  };

  // pass 1: cheap floods from every non-minimal member
  for (auto& [key, ids] : parts) {
    std::unordered_map<std::string, int> visited;
    for (size_t j = 1; j < ids.size(); j++) flood(ids[j], opt.quick_cap, visited);
  }
  // pass 2: contested partitions (several surviving roots) get deep floods,
  // repeated until no further classes merge
  for (auto& [key, ids] : parts) {
    for (int iter = 0; iter < 4; iter++) {
      std::set<int> roots;
      for (int id : ids) roots.insert(uf.find(id));
      if (roots.size() < 2) break;
      std::unordered_map<std::string, int> visited;
      bool any = false;
      for (int r : roots) any = flood(r, opt.deep_cap, visited) || any;
      if (!any) break;
    }
  }
  // flag classes reaching affine / adjacent codes: floods above only start
  // from non-minimal members, so give every surviving root a short flood
  for (auto& [key, ids] : parts) {
    std::set<int> roots;
    for (int id : ids) roots.insert(uf.find(id));
    for (int r : roots) {
      if (affine_flag[uf.find(r)]) continue;
      std::unordered_map<std::string, int> visited;
      flood(r, opt.quick_cap, visited);
    }
  }

  // connected sums: splice an affine prime into every small member and see
  // which class the result lands in
  std::vector<uint8_t> composite_flag(nm, 0);
  {
    std::vector<Diagram> factors = affine_prime_factors(opt.n_max);
    for (const Diagram& f : factors) {
      for (int i = 0; i < nm; i++) {
        int hn = members[i].crossings();
        if (hn < 1 || hn + f.n > opt.n_max) continue;
        for (int fd : {0, 1}) {
          Diagram sum = splice_sum(from_code(members[i]), f, 0, fd);
          GaussCode sc = canonical_code(sum);
          std::string key = normalized_T(sum).str();
          auto pit = parts.find(key);
          if (pit == parts.end()) { rep.unattached_sums++; continue; }
          // find which member the sum merges with
          auto mit = member_id.find(format_code(sc));
          int target = -1;
          if (mit != member_id.end()) target = uf.find(mit->second);
          if (target < 0) {
            // flood from the sum until it reaches a member
            BucketQueue q(bound_all);
            q.push(sum);
            std::set<std::string> seen;
            long expanded = 0;
            Diagram d;
            while (q.pop(d) && expanded < opt.deep_cap) {
              GaussCode c = canonical_code(d);
              std::string cs = format_code(c);
              auto it2 = member_id.find(cs);
              if (it2 != member_id.end()) { target = uf.find(it2->second); break; }
              if (!seen.insert(cs).second) continue;
              expanded++;
              move_neighbors(from_code(c), bound_all, [&](const Diagram& r) {
                if (r.n > 0) q.push(r);
              });
            }
          }
          if (target < 0) { rep.unattached_sums++; continue; }
          composite_flag[target] = 1;
        }
      }
    }
  }

  // assemble classes
  std::map<int, int> root_to_class;
  std::vector<int> root_of_member(nm);
  for (int i = 0; i < nm; i++) root_of_member[i] = uf.find(i);
  for (int i = 0; i < nm; i++) {
    int r = root_of_member[i];
    auto it = root_to_class.find(r);
    if (it == root_to_class.end()) {
      KnotClass kc;
      kc.rep = members[r];  // root is the least member by UnionFind::join
      kc.nmin = members[r].crossings();
      kc.key = keys[r];
      kc.status = ClassStatus::Prime;
      if (composite_flag[r]) kc.status = ClassStatus::Composite;
      if (affine_flag[r] && !core_flag[r]) kc.status = ClassStatus::AffineSum;
      root_to_class[r] = (int)rep.classes.size();
      rep.classes.push_back(kc);
      it = root_to_class.find(r);
    }
    KnotClass& kc = rep.classes[it->second];
    kc.members++;
    kc.nmin = std::min(kc.nmin, members[i].crossings());
  }

  // mirror pairing and tallies
  rep.prime_per_n.assign(opt.n_max + 1, 0);
  rep.pairs_per_n.assign(opt.n_max + 1, 0);
  rep.amphi_per_n.assign(opt.n_max + 1, 0);
  for (auto& [r, ci] : root_to_class) {
    KnotClass& kc = rep.classes[ci];
    GaussCode mc = canonical_code(mirror_diagram(from_code(kc.rep)));
    auto mit = member_id.find(format_code(mc));
    if (mit != member_id.end()) {
      int mr = uf.find(mit->second);
      auto cit = root_to_class.find(mr);
      if (cit != root_to_class.end()) {
        kc.mirror_class = cit->second;
        kc.amphichiral = (cit->second == ci);
      }
    }
    if (kc.status == ClassStatus::Prime) {
      rep.prime_per_n[kc.nmin]++;
      if (kc.amphichiral) rep.amphi_per_n[kc.nmin]++;
    }
  }
  for (auto& [r, ci] : root_to_class) {
    KnotClass& kc = rep.classes[ci];
    if (kc.status == ClassStatus::Prime && !kc.amphichiral && kc.mirror_class > ci)
      rep.pairs_per_n[kc.nmin]++;
  }

  // distinct surviving primes that share an invariant key
  for (auto& [key, ids] : parts) {
    std::set<int> roots;
    for (int id : ids) roots.insert(uf.find(id));
    std::vector<int> primes;
    for (int r : roots) {
      int ci = root_to_class[r];
      if (rep.classes[ci].status == ClassStatus::Prime) primes.push_back(r);
    }
    for (size_t a = 0; a < primes.size(); a++)
      for (size_t b = a + 1; b < primes.size(); b++)
        rep.shared_key_pairs.push_back({members[primes[a]], members[primes[b]]});
  }
  // second key: the oriented skein value separates most of the survivors
  for (auto& [a, b] : rep.shared_key_pairs)
    if (hsm_T(a) == hsm_T(b)) rep.unresolved_pairs.push_back({a, b});
  return rep;
}

// Table names n_j for prime classes: mirror orbits are sorted by their lesser
// representative within each crossing number; the lesser class gets the plain
// name, its mirror partner the same name with an 'm' suffix.
inline std::vector<std::string> class_names(const CensusReport& rep) {
  struct Orbit {
    int a, b;
    const GaussCode* key;
  };
  std::vector<Orbit> orbs;
  std::vector<uint8_t> done(rep.classes.size(), 0);
  for (int i = 0; i < (int)rep.classes.size(); i++) {
    const KnotClass& kc = rep.classes[i];
    if (kc.status != ClassStatus::Prime || done[i]) continue;
    int j = kc.mirror_class;
    done[i] = 1;
    Orbit o{i, -1, &kc.rep};
    if (j >= 0 && j != i && rep.classes[j].status == ClassStatus::Prime) {
      done[j] = 1;
      o.b = j;
      if (code_cmp(rep.classes[j].rep, *o.key) < 0) {
        o.key = &rep.classes[j].rep;
        std::swap(o.a, o.b);
      }
    }
    orbs.push_back(o);
  }
  std::sort(orbs.begin(), orbs.end(),
            [](const Orbit& x, const Orbit& y) { return code_cmp(*x.key, *y.key) < 0; });
  std::vector<std::string> names(rep.classes.size());
  std::map<int, int> idx;  // per crossing number
  for (const Orbit& o : orbs) {
    int n = rep.classes[o.a].nmin;
    std::string base = std::to_string(n) + "_" + std::to_string(++idx[n]);
    names[o.a] = base;
    if (o.b >= 0) names[o.b] = base + "m";
  }
  return names;
}

}  // namespace lenstab
