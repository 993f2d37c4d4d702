#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"

#include "rootdata.hpp"

namespace qschow {

constexpr int kMaxRank = 8;
using Mat = std::array<std::int16_t, kMaxRank * kMaxRank>;  // row-major, stride kMaxRank

struct MatHash {
  std::size_t operator()(const Mat& m) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto x : m) {
      h ^= static_cast<std::uint16_t>(x);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

struct WeylElement {
  Mat m{};
  int length = 0;
  bool operator==(const WeylElement& o) const { return m == o.m; }
};

inline Mat identity_mat(int n) {
  Mat m{};
  for (int i = 0; i < n; ++i) m[i * kMaxRank + i] = 1;
  return m;
}

inline Mat mat_mul(const Mat& a, const Mat& b, int n) {
  Mat c{};
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      int aik = a[i * kMaxRank + k];
      if (!aik) continue;
      for (int j = 0; j < n; ++j) c[i * kMaxRank + j] = static_cast<std::int16_t>(c[i * kMaxRank + j] + aik * b[k * kMaxRank + j]);
    }
  return c;
}

inline IVec mat_apply(const Mat& a, const IVec& v, int n) {
  IVec out(n, 0);
  for (int i = 0; i < n; ++i) {
    long long s = 0;
    for (int j = 0; j < n; ++j) s += a[i * kMaxRank + j] * v[j];
    out[i] = s;
  }
  return out;
}

// s_alpha = I - alpha_w * coroot^T in fundamental-weight coordinates
inline Mat reflection_mat(const RootDatum& R, std::size_t a) {
  int n = R.rank;
  Mat m = identity_mat(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m[i * kMaxRank + j] = static_cast<std::int16_t>(m[i * kMaxRank + j] - R.roots[a][i] * R.coroots[a][j]);
  return m;
}

inline Mat simple_reflection_mat(const RootDatum& R, int i) {
  IVec e(R.rank, 0);
  e[i] = 1;
  int a = R.root_index(R.to_weight(e));
  return reflection_mat(R, static_cast<std::size_t>(a));
}

// w * s_alpha = M - (M alpha_w) coroot^T
inline Mat right_reflect(const RootDatum& R, const Mat& M, std::size_t a) {
  int n = R.rank;
  IVec wa = mat_apply(M, R.roots[a], n);
  Mat out = M;
  for (int i = 0; i < n; ++i)
    if (wa[i])
      for (int j = 0; j < n; ++j)
        out[i * kMaxRank + j] = static_cast<std::int16_t>(out[i * kMaxRank + j] - wa[i] * R.coroots[a][j]);
  return out;
}

inline int inversion_length(const RootDatum& R, const Mat& M) {
  int len = 0;
  for (std::size_t a = 0; a < R.num_pos(); ++a)
    if (R.root_sign(mat_apply(M, R.roots[a], R.rank)) < 0) ++len;
  return len;
}

inline WeylElement weyl_identity(const RootDatum& R) { return {identity_mat(R.rank), 0}; }

inline WeylElement reflect(const RootDatum& R, const WeylElement& w, std::size_t a) {
  WeylElement out;
  out.m = right_reflect(R, w.m, a);
  out.length = inversion_length(R, out.m);
  return out;
}

// Word of 1-based simple reflection labels, read as the matrix product in order.
inline WeylElement from_word(const RootDatum& R, const std::vector<int>& word) {
  Mat m = identity_mat(R.rank);
  for (int i : word) {
    if (i < 1 || i > R.rank) throw std::invalid_argument("bad simple reflection index");
    m = mat_mul(m, simple_reflection_mat(R, i - 1), R.rank);
  }
  return {m, inversion_length(R, m)};
}

// "s3s4s2" or "3 4 2" or "342" (single digits)
inline std::vector<int> parse_word(const std::string& s) {
  std::vector<int> out;
  std::string digits;
  for (char c : s) {
    if (c >= '0' && c <= '9') digits += c;
    else if (!digits.empty()) {
      if (c == ' ' || c == ',') { out.push_back(std::stoi(digits)); digits.clear(); }
      else { for (char d : digits) out.push_back(d - '0'); digits.clear(); }
    }
  }
  for (char d : digits) out.push_back(d - '0');
  return out;
}

// Reduced word via right descents, 1-based labels.
inline std::vector<int> reduced_word(const RootDatum& R, Mat m) {
  std::vector<int> rev;
  for (;;) {
    int found = -1;
    for (int i = 0; i < R.rank && found < 0; ++i) {
      if (R.root_sign(mat_apply(m, R.simple[i], R.rank)) < 0) found = i;
    }
    if (found < 0) break;
    m = mat_mul(m, simple_reflection_mat(R, found), R.rank);
    rev.push_back(found + 1);
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

inline std::string word_string(const std::vector<int>& w) {
  if (w.empty()) return "e";
  std::string s;
  for (int i : w) s += "s" + std::to_string(i);
  return s;
}

// sigma(w) = P w P^{-1}; M'[s(i)][s(j)] = M[i][j]
inline Mat galois_mat(const Perm& s, const Mat& M, int n) {
  Mat out{};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[s[i] * kMaxRank + s[j]] = M[i * kMaxRank + j];
  return out;
}

inline WeylElement apply_galois(const Perm& s, const WeylElement& w, int n) { return {galois_mat(s, w.m, n), w.length}; }

struct WeylOptions {
  double budget = 1e6;     // element budget for the memory guard
  std::string cache_dir;   // empty: no cache
};

class WeylTable {
 public:
  RootDatum R;
  int cap = 0;
  std::vector<std::vector<Mat>> by_length;
  std::vector<std::unordered_map<Mat, int, MatHash>> index;
  // up[d][i] = list of (index at length d+1, positive root index) with l(w s_a) = l(w)+1
  std::vector<std::vector<std::vector<std::pair<int, int>>>> up;
  bool loaded_from_cache = false;

  std::size_t count(int d) const { return d < 0 || d > cap ? 0 : by_length[d].size(); }
  int find(int d, const Mat& m) const {
    if (d < 0 || d > cap) return -1;
    auto it = index[d].find(m);
    return it == index[d].end() ? -1 : it->second;
  }
  int find(const WeylElement& w) const { return find(w.length, w.m); }
  WeylElement element(int d, int i) const { return {by_length[d][i], d}; }
  std::vector<std::size_t> counts() const {
    std::vector<std::size_t> c;
    for (int d = 0; d <= cap; ++d) c.push_back(count(d));
    return c;
  }
  std::size_t total() const {
    std::size_t t = 0;
    for (auto& v : by_length) t += v.size();
    return t;
  }
  int top_degree() const { return static_cast<int>(R.num_pos()); }

  void build_index_and_transitions() {
    int n = R.rank;
    index.assign(cap + 1, {});
    for (int d = 0; d <= cap; ++d) {
      index[d].reserve(by_length[d].size() * 2);
      for (std::size_t i = 0; i < by_length[d].size(); ++i) index[d][by_length[d][i]] = static_cast<int>(i);
    }
    up.assign(cap + 1, {});
    for (int d = 0; d < cap; ++d) {
      up[d].resize(by_length[d].size());
      for (std::size_t i = 0; i < by_length[d].size(); ++i) {
        const Mat& M = by_length[d][i];
        for (std::size_t a = 0; a < R.num_pos(); ++a) {
          IVec wa = mat_apply(M, R.roots[a], n);
          if (R.root_sign(wa) < 0) continue;
          Mat m2 = M;
          for (int r = 0; r < n; ++r)
            if (wa[r])
              for (int c = 0; c < n; ++c)
                m2[r * kMaxRank + c] = static_cast<std::int16_t>(m2[r * kMaxRank + c] - wa[r] * R.coroots[a][c]);
          auto it = index[d + 1].find(m2);
          if (it != index[d + 1].end()) up[d][i].push_back({it->second, static_cast<int>(a)});
        }
      }
    }
  }
};

inline std::string weyl_cache_path(const std::string& dir, const RootDatum& R, int cap) {
  return (std::filesystem::path(dir) / ("weyl_" + R.name() + "_cap" + std::to_string(cap) + ".json")).string();
}

constexpr int kWeylCacheVersion = 1;

inline bool load_weyl_cache(const std::string& path, const RootDatum& R, int cap, WeylTable& T) {
  std::ifstream in(path);
  if (!in) return false;
  nlohmann::json j;
  try {
    in >> j;
  } catch (...) {
    return false;
  }
  if (j.value("format_version", 0) != kWeylCacheVersion || j.value("type", "") != type_letter(R.type) ||
      j.value("rank", 0) != R.rank || j.value("cap", -1) != cap)
    return false;
  int n = R.rank;
  auto series = poincare_series(R.type, R.rank, cap);
  T.by_length.assign(cap + 1, {});
  const auto& bl = j.at("by_length");
  if (static_cast<int>(bl.size()) != cap + 1) return false;
  for (int d = 0; d <= cap; ++d) {
    for (const auto& e : bl[d]) {
      if (static_cast<int>(e.size()) != n * n) return false;
      Mat m{};
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m[r * kMaxRank + c] = static_cast<std::int16_t>(e[r * n + c].get<int>());
      T.by_length[d].push_back(m);
    }
    if (static_cast<double>(T.by_length[d].size()) != series[d]) return false;
    // spot check a few lengths
    std::size_t step = std::max<std::size_t>(1, T.by_length[d].size() / 7);
    for (std::size_t i = 0; i < T.by_length[d].size(); i += step)
      if (inversion_length(R, T.by_length[d][i]) != d) return false;
  }
  return true;
}

inline void save_weyl_cache(const std::string& path, const WeylTable& T) {
  int n = T.R.rank;
  nlohmann::json j;
  j["format_version"] = kWeylCacheVersion;
  j["type"] = type_letter(T.R.type);
  j["rank"] = n;
  j["cap"] = T.cap;
  nlohmann::json bl = nlohmann::json::array();
  for (int d = 0; d <= T.cap; ++d) {
    nlohmann::json lv = nlohmann::json::array();
    for (const auto& m : T.by_length[d]) {
      std::vector<int> flat;
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) flat.push_back(m[r * kMaxRank + c]);
      lv.push_back(flat);
    }
    bl.push_back(lv);
  }
  j["by_length"] = bl;
  std::filesystem::create_directories(std::filesystem::path(path).parent_path());
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    out << j.dump();
  }
  std::filesystem::rename(tmp, path);
}

struct GuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline WeylTable enumerate_up_to(const RootDatum& R, int cap, const WeylOptions& opt = {}) {
  if (cap < 0) throw std::invalid_argument("cap must be nonnegative");
  int top = static_cast<int>(R.num_pos());
  if (cap > top) cap = top;
  auto series = poincare_series(R.type, R.rank, cap);
  double projected = 0;
  for (double c : series) projected += c;
  if (projected > opt.budget) {
    std::ostringstream os;
    os << "refusing to enumerate " << R.name() << " up to length " << cap << ": " << projected
       << " elements exceed the budget of " << opt.budget;
    throw GuardError(os.str());
  }
  WeylTable T;
  T.R = R;
  T.cap = cap;
  std::string path;
  if (!opt.cache_dir.empty()) {
    path = weyl_cache_path(opt.cache_dir, R, cap);
    if (load_weyl_cache(path, R, cap, T)) {
      T.loaded_from_cache = true;
      T.build_index_and_transitions();
      return T;
    }
  }
  int n = R.rank;
  std::vector<Mat> simple;
  for (int i = 0; i < n; ++i) simple.push_back(simple_reflection_mat(R, i));
  T.by_length.assign(cap + 1, {});
  T.by_length[0].push_back(identity_mat(n));
  for (int d = 0; d < cap; ++d) {
    std::unordered_map<Mat, int, MatHash> next;
    next.reserve(static_cast<std::size_t>(series[d + 1] * 2) + 1);
    for (const Mat& M : T.by_length[d])
      for (int i = 0; i < n; ++i) {
        if (R.root_sign(mat_apply(M, R.simple[i], n)) < 0) continue;
        next.emplace(mat_mul(M, simple[i], n), 0);
      }
    auto& lv = T.by_length[d + 1];
    lv.reserve(next.size());
    for (auto& kv : next) lv.push_back(kv.first);
    std::sort(lv.begin(), lv.end());
  }
  T.build_index_and_transitions();
  if (!path.empty()) save_weyl_cache(path, T);
  return T;
}

// Full group by closure under multiplication by simple reflections; used as an oracle.
inline std::vector<Mat> brute_force_group(const RootDatum& R, std::size_t limit = 2000000) {
  int n = R.rank;
  std::vector<Mat> gens;
  for (int i = 0; i < n; ++i) gens.push_back(simple_reflection_mat(R, i));
  std::unordered_map<Mat, int, MatHash> seen;
  std::vector<Mat> out{identity_mat(n)};
  seen.emplace(out[0], 0);
  for (std::size_t q = 0; q < out.size(); ++q)
    for (const auto& g : gens) {
      Mat m = mat_mul(g, out[q], n);
      if (seen.emplace(m, 0).second) {
        out.push_back(m);
        if (out.size() > limit) throw GuardError("group too large");
      }
    }
  return out;
}

// Index of sigma(w) for every element of every length.
inline std::vector<std::vector<int>> galois_index(const WeylTable& T, const Perm& s) {
  std::vector<std::vector<int>> out(T.cap + 1);
  for (int d = 0; d <= T.cap; ++d) {
    out[d].resize(T.count(d));
    for (std::size_t i = 0; i < T.count(d); ++i) {
      int j = T.find(d, galois_mat(s, T.by_length[d][i], T.R.rank));
      if (j < 0) throw std::logic_error("diagram automorphism does not preserve length");
      out[d][i] = j;
    }
  }
  return out;
}

}  // namespace qschow
