#include "adlv/root_system.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace adlv {

namespace {

bool supported(char type, int rank) {
  switch (type) {
    case 'A':
      return rank >= 1 && rank <= 4;
    case 'B':
      return rank >= 2 && rank <= 3;
    case 'C':
      return rank >= 2 && rank <= 4;
    case 'D':
      return rank == 4;
    case 'G':
      return rank == 2;
    default:
      return false;
  }
}

IntMat cartan_matrix(char type, int rank) {
  IntMat c = IntMat::Zero(rank, rank);
  for (int i = 0; i < rank; ++i) c(i, i) = 2;
  auto chain = [&](int i, int j) {
    c(i, j) = -1;
    c(j, i) = -1;
  };
  switch (type) {
    case 'A':
      for (int i = 0; i + 1 < rank; ++i) chain(i, i + 1);
      break;
    case 'B':  // last simple root short: <alpha_{n-1}, alpha_n^vee> = -2
      for (int i = 0; i + 1 < rank; ++i) chain(i, i + 1);
      c(rank - 2, rank - 1) = -2;
      break;
    case 'C':  // last simple root long: <alpha_n, alpha_{n-1}^vee> = -2
      for (int i = 0; i + 1 < rank; ++i) chain(i, i + 1);
      c(rank - 1, rank - 2) = -2;
      break;
    case 'D':  // D4: alpha_2 is the branch node
      chain(0, 1);
      chain(1, 2);
      chain(1, 3);
      break;
    case 'G':  // alpha_1 short: <alpha_2, alpha_1^vee> = -3
      c(0, 1) = -1;
      c(1, 0) = -3;
      break;
    default:
      break;
  }
  return c;
}

}  // namespace

std::shared_ptr<const RootSystem> RootSystem::build(char type, int rank) {
  if (!supported(type, rank))
    throw ConfigError(std::string("unsupported root system ") + type +
                      std::to_string(rank));
  auto rs = std::shared_ptr<RootSystem>(new RootSystem());
  rs->init(type, rank);
  return rs;
}

std::shared_ptr<const RootSystem> RootSystem::build(const std::string& label) {
  if (label.size() < 2) throw ConfigError("bad root system label: " + label);
  char type = label[0];
  int rank = 0;
  try {
    rank = std::stoi(label.substr(1));
  } catch (...) {
    throw ConfigError("bad root system label: " + label);
  }
  return build(type, rank);
}

std::shared_ptr<const RootSystem> build_root_system(char type, int rank) {
  return RootSystem::build(type, rank);
}

void RootSystem::init(char type, int rank) {
  label_ = std::string(1, type) + std::to_string(rank);
  rank_ = rank;
  cartan_ = cartan_matrix(type, rank);
  build_roots();
  build_weyl();
}

void RootSystem::build_roots() {
  const int r = rank_;
  // Closure of the simple (root, coroot) pairs under all simple reflections.
  std::map<std::vector<Int>, IntVec> seen;  // root coords -> coroot coords
  std::vector<IntVec> queue_roots, queue_coroots;
  for (int i = 0; i < r; ++i) {
    IntVec e = IntVec::Zero(r);
    e(i) = 1;
    seen.emplace(to_std(e), e);
    queue_roots.push_back(e);
    queue_coroots.push_back(e);
  }
  for (std::size_t h = 0; h < queue_roots.size(); ++h) {
    if (queue_roots.size() > 4096)
      throw InvariantError("root closure did not terminate");
    IntVec a = queue_roots[h];
    IntVec b = queue_coroots[h];
    for (int i = 0; i < r; ++i) {
      // s_i on root coords and on coroot (coweight) coords.
      Int pa = 0, pb = 0;
      for (int j = 0; j < r; ++j) {
        pa += a(j) * cartan_(j, i);
        pb += cartan_(i, j) * b(j);
      }
      IntVec a2 = a;
      a2(i) -= pa;
      IntVec b2 = b;
      b2(i) -= pb;
      auto key = to_std(a2);
      if (!seen.count(key)) {
        seen.emplace(key, b2);
        queue_roots.push_back(a2);
        queue_coroots.push_back(b2);
      }
    }
  }
  for (auto& [rc, cc] : seen) {
    IntVec a = from_std(rc);
    if ((a.array() >= 0).all()) {
      RootData rd;
      rd.root = a;
      rd.coroot = cc;
      rd.height = static_cast<int>(a.sum());
      roots_.push_back(std::move(rd));
    }
  }
  std::sort(roots_.begin(), roots_.end(),
            [](const RootData& x, const RootData& y) {
              if (x.height != y.height) return x.height < y.height;
              return lex_less(y.root, x.root);  // alpha_1 before alpha_2
            });
  for (int i = 0; i < rank_; ++i) {
    IntVec e = IntVec::Zero(rank_);
    e(i) = 1;
    if (roots_[i].root != e)
      throw InvariantError("simple roots not in expected slots");
  }
  // highest root: unique maximal height
  theta_ = 0;
  for (int a = 1; a < num_positive_roots(); ++a)
    if (roots_[a].height > roots_[theta_].height) theta_ = a;
  for (int a = 0; a < num_positive_roots(); ++a)
    if (a != theta_ && roots_[a].height == roots_[theta_].height)
      throw InvariantError("highest root is not unique");

  pair_rows_ = IntMat::Zero(num_positive_roots(), rank_);
  for (int a = 0; a < num_positive_roots(); ++a)
    pair_rows_.row(a) = roots_[a].root.transpose() * cartan_;
  two_rho_row_ = pair_rows_.colwise().sum().transpose();
  two_rho_vee_ = IntVec::Zero(rank_);
  for (const auto& rd : roots_) two_rho_vee_ += rd.coroot;

  // fundamental coweights: columns of the inverse Cartan matrix
  // (exact Gauss-Jordan over rationals).
  RatMat aug(rank_, 2 * rank_);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) {
      aug(i, j) = Rat(cartan_(i, j));
      aug(i, rank_ + j) = Rat(i == j ? 1 : 0);
    }
  for (int col = 0; col < rank_; ++col) {
    int piv = -1;
    for (int i = col; i < rank_; ++i)
      if (aug(i, col) != Rat(0)) {
        piv = i;
        break;
      }
    if (piv < 0) throw InvariantError("singular Cartan matrix");
    if (piv != col)
      for (int j = 0; j < 2 * rank_; ++j) std::swap(aug(piv, j), aug(col, j));
    Rat d = aug(col, col);
    for (int j = 0; j < 2 * rank_; ++j) aug(col, j) /= d;
    for (int i = 0; i < rank_; ++i) {
      if (i == col) continue;
      Rat f = aug(i, col);
      if (f == Rat(0)) continue;
      for (int j = 0; j < 2 * rank_; ++j) aug(i, j) -= f * aug(col, j);
    }
  }
  fund_cw_.resize(rank_);
  for (int j = 0; j < rank_; ++j) {
    RatVec v(rank_);
    for (int i = 0; i < rank_; ++i) v(i) = aug(i, rank_ + j);
    fund_cw_[j] = v;
  }

  const IntVec& marks = roots_[theta_].root;
  RatVec bary = RatVec::Constant(rank_, Rat(0));
  for (int j = 0; j < rank_; ++j)
    for (int i = 0; i < rank_; ++i)
      bary(i) += fund_cw_[j](i) / Rat(marks(j));
  for (int i = 0; i < rank_; ++i) bary(i) /= Rat(rank_ + 1);
  base_bary_ = bary;
}

void RootSystem::build_weyl() {
  const int r = rank_;
  const int npos = num_positive_roots();

  // Simple-reflection matrices on coweight and root coordinates.
  std::vector<IntMat> cw_gen(r), rt_gen(r);
  for (int i = 0; i < r; ++i) {
    IntMat s = IntMat::Identity(r, r);
    s.row(i) -= cartan_.row(i);
    cw_gen[i] = s;
    IntMat t = IntMat::Identity(r, r);
    t.row(i) -= cartan_.col(i).transpose();
    rt_gen[i] = t;
  }

  auto mat_key = [r](const IntMat& m) {
    std::vector<Int> k;
    k.reserve(r * r);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) k.push_back(m(i, j));
    return k;
  };

  std::map<std::vector<Int>, int> index;
  std::vector<IntMat> rt_mats;
  welts_.clear();
  {
    WeylData id;
    id.mat = IntMat::Identity(r, r);
    id.inv = 0;
    welts_.push_back(id);
    rt_mats.push_back(IntMat::Identity(r, r));
    index.emplace(mat_key(id.mat), 0);
  }
  for (std::size_t h = 0; h < welts_.size(); ++h) {
    if (welts_.size() > 4096) throw InvariantError("Weyl closure exploded");
    for (int i = 0; i < r; ++i) {
      IntMat m = welts_[h].mat * cw_gen[i];
      auto key = mat_key(m);
      if (!index.count(key)) {
        WeylData wd;
        wd.mat = m;
        wd.word = welts_[h].word;
        wd.word.push_back(i + 1);
        wd.inv = -1;
        index.emplace(key, static_cast<int>(welts_.size()));
        rt_mats.push_back(rt_mats[h] * rt_gen[i]);
        welts_.push_back(std::move(wd));
      }
    }
  }
  const int n = order();

  mult_.assign(static_cast<std::size_t>(n) * n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      IntMat m = welts_[a].mat * welts_[b].mat;
      mult_[static_cast<std::size_t>(a) * n + b] = index.at(mat_key(m));
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (w_mult(a, b) == 0) {
        welts_[a].inv = b;
        break;
      }

  simple_.resize(r);
  for (int i = 0; i < r; ++i) simple_[i] = index.at(mat_key(cw_gen[i]));

  std::map<std::vector<Int>, int> root_index;
  for (int a = 0; a < npos; ++a) root_index.emplace(to_std(roots_[a].root), a);
  root_image_.resize(static_cast<std::size_t>(n) * npos);
  for (int w = 0; w < n; ++w) {
    for (int a = 0; a < npos; ++a) {
      IntVec img = rt_mats[w] * roots_[a].root;
      auto it = root_index.find(to_std(img));
      if (it != root_index.end()) {
        root_image_[static_cast<std::size_t>(w) * npos + a] = {it->second, +1};
      } else {
        IntVec neg = -img;
        root_image_[static_cast<std::size_t>(w) * npos + a] = {
            root_index.at(to_std(neg)), -1};
      }
    }
  }

  longest_ = -1;
  for (int w = 0; w < n; ++w) {
    bool all_neg = true;
    for (int a = 0; a < r; ++a)
      if (w_root_image(w, a).sign > 0) {
        all_neg = false;
        break;
      }
    if (all_neg) {
      longest_ = w;
      break;
    }
  }
  if (longest_ < 0) throw InvariantError("no longest element found");

  IntMat s_theta = IntMat::Identity(r, r);
  s_theta -= roots_[theta_].coroot * pair_rows_.row(theta_);
  s_theta_ = index.at(mat_key(s_theta));

  for (int w = 0; w < n; ++w)
    welts_[w].theta_cw = welts_[w].mat * roots_[theta_].coroot;
}

Int RootSystem::pairing(const IntVec& root_coords, const Coweight& cw) const {
  return root_coords.transpose() * cartan_ * cw;
}

Int RootSystem::pair_pos(int a, const Coweight& cw) const {
  return pair_rows_.row(a) * cw;
}

Rat RootSystem::pair_pos(int a, const RatVec& v) const {
  Rat s(0);
  for (int j = 0; j < rank_; ++j) s += Rat(pair_rows_(a, j)) * v(j);
  return s;
}

Rat RootSystem::rho_pairing(const Coweight& cw) const {
  return Rat(two_rho_row_.dot(cw), 2);
}

Rat RootSystem::rho_pairing(const RatVec& v) const {
  Rat s(0);
  for (int j = 0; j < rank_; ++j) s += Rat(two_rho_row_(j)) * v(j);
  return s / Rat(2);
}

Int RootSystem::form(const Coweight& x, const Coweight& y) const {
  Int s = 0;
  for (int a = 0; a < num_positive_roots(); ++a)
    s += pair_pos(a, x) * pair_pos(a, y);
  return s;
}

RatVec RootSystem::w_apply(int w, const RatVec& v) const {
  const IntMat& m = welts_[w].mat;
  RatVec out = RatVec::Constant(rank_, Rat(0));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) out(i) += Rat(m(i, j)) * v(j);
  return out;
}

bool is_dominant(const RootSystem& rs, const Coweight& cw) {
  for (int i = 1; i <= rs.rank(); ++i)
    if (rs.pair_pos(i - 1, cw) < 0) return false;
  return true;
}

bool is_dominant(const RootSystem& rs, const RatVec& v) {
  for (int i = 1; i <= rs.rank(); ++i)
    if (rs.pair_pos(i - 1, v) < Rat(0)) return false;
  return true;
}

std::pair<Coweight, int> dominant_rep(const RootSystem& rs,
                                      const Coweight& cw) {
  Coweight v = cw;
  int u = 0;
  for (;;) {
    int i = -1;
    Int p = 0;
    for (int k = 0; k < rs.rank(); ++k) {
      p = rs.pair_pos(k, v);
      if (p < 0) {
        i = k;
        break;
      }
    }
    if (i < 0) return {v, u};
    v(i) -= p;
    u = rs.w_mult(rs.simple(i + 1), u);
  }
}

std::pair<RatVec, int> dominant_rep(const RootSystem& rs, const RatVec& in) {
  RatVec v = in;
  int u = 0;
  for (;;) {
    int i = -1;
    Rat p(0);
    for (int k = 0; k < rs.rank(); ++k) {
      p = rs.pair_pos(k, v);
      if (p < Rat(0)) {
        i = k;
        break;
      }
    }
    if (i < 0) return {v, u};
    v(i) -= p;
    u = rs.w_mult(rs.simple(i + 1), u);
  }
}

bool leq_dominance(const Coweight& nu, const Coweight& mu) {
  return ((mu - nu).array() >= 0).all();
}

std::vector<Coweight> weyl_orbit(const RootSystem& rs, const Coweight& cw) {
  std::set<std::vector<Int>> seen;
  std::vector<Coweight> queue{cw};
  seen.insert(to_std(cw));
  for (std::size_t h = 0; h < queue.size(); ++h) {
    Coweight v = queue[h];
    for (int i = 0; i < rs.rank(); ++i) {
      Coweight v2 = v;
      v2(i) -= rs.pair_pos(i, v);
      auto key = to_std(v2);
      if (seen.insert(key).second) queue.push_back(v2);
    }
  }
  std::vector<Coweight> out;
  out.reserve(seen.size());
  for (const auto& k : seen) out.push_back(from_std(k));
  return out;
}

bool lex_less(const IntVec& a, const IntVec& b) {
  for (int i = 0; i < a.size() && i < b.size(); ++i) {
    if (a(i) != b(i)) return a(i) < b(i);
  }
  return a.size() < b.size();
}

std::vector<Int> to_std(const IntVec& v) {
  return std::vector<Int>(v.data(), v.data() + v.size());
}

IntVec from_std(const std::vector<Int>& v) {
  IntVec out(static_cast<Eigen::Index>(v.size()));
  for (Eigen::Index i = 0; i < out.size(); ++i) out(i) = v[i];
  return out;
}

}  // namespace adlv
