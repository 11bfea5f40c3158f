#include "absord/elements.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace absord {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

// ---------- Perm ----------

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    require(v >= 0 && v < n() && !seen[v], "Perm: images are not a bijection");
    seen[v] = 1;
  }
}

Perm Perm::identity(int n) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i;
  return Perm(std::move(img));
}

Perm Perm::transposition(int n, int a, int b) {
  Perm p = identity(n);
  std::swap(p.img_[a], p.img_[b]);
  return p;
}

Perm Perm::compose(const Perm& o) const {
  require(n() == o.n(), "Perm: size mismatch");
  std::vector<int> img(n());
  for (int i = 0; i < n(); ++i) img[i] = img_[o.img_[i]];
  Perm p;
  p.img_ = std::move(img);
  return p;
}

Perm Perm::inverse() const {
  std::vector<int> img(n());
  for (int i = 0; i < n(); ++i) img[img_[i]] = i;
  Perm p;
  p.img_ = std::move(img);
  return p;
}

bool Perm::is_identity() const {
  for (int i = 0; i < n(); ++i)
    if (img_[i] != i) return false;
  return true;
}

std::vector<std::vector<int>> Perm::cycles(bool include_fixed) const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(n(), 0);
  for (int i = 0; i < n(); ++i) {
    if (seen[i]) continue;
    std::vector<int> cyc;
    int j = i;
    do {
      seen[j] = 1;
      cyc.push_back(j);
      j = img_[j];
    } while (j != i);
    if (cyc.size() > 1 || include_fixed) out.push_back(std::move(cyc));
  }
  return out;
}

int Perm::num_cycles() const { return static_cast<int>(cycles(true).size()); }

// ---------- SignedPerm ----------

SignedPerm::SignedPerm(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    int a = std::abs(v);
    require(a >= 1 && a <= n() && !seen[a - 1], "SignedPerm: images are not a signed bijection");
    seen[a - 1] = 1;
  }
}

SignedPerm SignedPerm::identity(int n) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i + 1;
  return SignedPerm(std::move(img));
}

int SignedPerm::apply(int signed_pt) const {
  if (signed_pt > 0) return img_[signed_pt - 1];
  return -img_[-signed_pt - 1];
}

SignedPerm SignedPerm::compose(const SignedPerm& o) const {
  require(n() == o.n(), "SignedPerm: size mismatch");
  std::vector<int> img(n());
  for (int i = 1; i <= n(); ++i) img[i - 1] = apply(o.apply(i));
  SignedPerm w;
  w.img_ = std::move(img);
  return w;
}

SignedPerm SignedPerm::inverse() const {
  std::vector<int> img(n());
  for (int i = 1; i <= n(); ++i) {
    int j = img_[i - 1];
    if (j > 0)
      img[j - 1] = i;
    else
      img[-j - 1] = -i;
  }
  SignedPerm w;
  w.img_ = std::move(img);
  return w;
}

bool SignedPerm::is_identity() const {
  for (int i = 0; i < n(); ++i)
    if (img_[i] != i + 1) return false;
  return true;
}

int SignedPerm::sign_changes() const {
  int c = 0;
  for (int v : img_)
    if (v < 0) ++c;
  return c;
}

Perm SignedPerm::underlying() const {
  std::vector<int> img(n());
  for (int i = 0; i < n(); ++i) img[i] = std::abs(img_[i]) - 1;
  return Perm(std::move(img));
}

int SignedPerm::num_balanced_cycles() const {
  int count = 0;
  for (const auto& cyc : underlying().cycles(true)) {
    int neg = 0;
    for (int i : cyc)
      if (img_[i] < 0) ++neg;
    if (neg % 2 == 0) ++count;
  }
  return count;
}

// ---------- ColoredPerm ----------

ColoredPerm::ColoredPerm(int r, std::vector<int> colors, Perm perm)
    : r_(r), colors_(std::move(colors)), perm_(std::move(perm)) {
  require(r_ >= 1, "ColoredPerm: color order must be positive");
  require(static_cast<int>(colors_.size()) == perm_.n(), "ColoredPerm: color count mismatch");
  for (int c : colors_) require(c >= 0 && c < r_, "ColoredPerm: color out of range");
}

ColoredPerm ColoredPerm::identity(int r, int n) {
  return ColoredPerm(r, std::vector<int>(n, 0), Perm::identity(n));
}

ColoredPerm ColoredPerm::from_signed(const SignedPerm& w) {
  Perm p = w.underlying();
  std::vector<int> colors(w.n(), 0);
  for (int i = 0; i < w.n(); ++i) {
    int v = w.images()[i];
    colors[std::abs(v) - 1] = v < 0 ? 1 : 0;
  }
  return ColoredPerm(2, std::move(colors), std::move(p));
}

SignedPerm ColoredPerm::to_signed() const {
  require(r_ == 2, "ColoredPerm: to_signed requires color order 2");
  std::vector<int> img(n());
  for (int i = 0; i < n(); ++i) {
    int p = perm_.apply(i);
    img[i] = colors_[p] ? -(p + 1) : p + 1;
  }
  return SignedPerm(std::move(img));
}

ColoredPerm ColoredPerm::compose(const ColoredPerm& o) const {
  require(r_ == o.r_ && n() == o.n(), "ColoredPerm: shape mismatch");
  Perm pinv = perm_.inverse();
  std::vector<int> colors(n());
  for (int j = 0; j < n(); ++j) colors[j] = (colors_[j] + o.colors_[pinv.apply(j)]) % r_;
  return ColoredPerm(r_, std::move(colors), perm_.compose(o.perm_));
}

ColoredPerm ColoredPerm::inverse() const {
  std::vector<int> colors(n());
  for (int i = 0; i < n(); ++i) colors[i] = (r_ - colors_[perm_.apply(i)]) % r_;
  return ColoredPerm(r_, std::move(colors), perm_.inverse());
}

bool ColoredPerm::is_identity() const {
  if (!perm_.is_identity()) return false;
  for (int c : colors_)
    if (c != 0) return false;
  return true;
}

bool ColoredPerm::cycle_balanced(const std::vector<int>& cycle) const {
  int s = 0;
  for (int i : cycle) s += colors_[i];
  return s % r_ == 0;
}

bool ColoredPerm::balanced() const {
  for (const auto& cyc : perm_.cycles(true))
    if (!cycle_balanced(cyc)) return false;
  return true;
}

int ColoredPerm::num_balanced_cycles() const {
  int count = 0;
  for (const auto& cyc : perm_.cycles(true))
    if (cycle_balanced(cyc)) ++count;
  return count;
}

// ---------- DihedralElem ----------

DihedralElem::DihedralElem(int m, bool reflection, int k) : m_(m), refl_(reflection) {
  require(m_ >= 1, "DihedralElem: m must be positive");
  k_ = ((k % m_) + m_) % m_;
}

DihedralElem DihedralElem::identity(int m) { return DihedralElem(m, false, 0); }

DihedralElem DihedralElem::compose(const DihedralElem& o) const {
  require(m_ == o.m_, "DihedralElem: m mismatch");
  // (s^f1 r^k1)(s^f2 r^k2) = s^(f1 xor f2) r^(k2 + (f2 ? -k1 : k1))
  int k = o.k_ + (o.refl_ ? -k_ : k_);
  return DihedralElem(m_, refl_ != o.refl_, k);
}

DihedralElem DihedralElem::inverse() const {
  if (refl_) return *this;
  return DihedralElem(m_, false, -k_);
}

// ---------- GroupElement ----------

GroupElement compose(const GroupElement& u, const GroupElement& v) {
  require(u.index() == v.index(), "compose: element kinds differ");
  return std::visit(
      [&](const auto& a) -> GroupElement {
        using T = std::decay_t<decltype(a)>;
        return a.compose(std::get<T>(v));
      },
      u);
}

GroupElement inverse(const GroupElement& w) {
  return std::visit([](const auto& a) -> GroupElement { return a.inverse(); }, w);
}

bool is_identity(const GroupElement& w) {
  return std::visit([](const auto& a) { return a.is_identity(); }, w);
}

std::vector<int> element_key(const GroupElement& w) {
  std::vector<int> key;
  if (const auto* p = std::get_if<Perm>(&w)) {
    key = {0, p->n()};
    key.insert(key.end(), p->images().begin(), p->images().end());
  } else if (const auto* s = std::get_if<SignedPerm>(&w)) {
    key = {1, s->n()};
    key.insert(key.end(), s->images().begin(), s->images().end());
  } else if (const auto* c = std::get_if<ColoredPerm>(&w)) {
    key = {2, c->r(), c->n()};
    key.insert(key.end(), c->colors().begin(), c->colors().end());
    key.insert(key.end(), c->perm().images().begin(), c->perm().images().end());
  } else {
    const auto& d = std::get<DihedralElem>(w);
    key = {3, d.m(), d.reflection() ? 1 : 0, d.k()};
  }
  return key;
}

std::vector<int> one_line_key(const GroupElement& w) {
  if (const auto* p = std::get_if<Perm>(&w)) return p->images();
  if (const auto* s = std::get_if<SignedPerm>(&w)) return s->images();
  if (const auto* c = std::get_if<ColoredPerm>(&w)) {
    std::vector<int> key = c->perm().images();
    key.insert(key.end(), c->colors().begin(), c->colors().end());
    return key;
  }
  const auto& d = std::get<DihedralElem>(w);
  return {d.reflection() ? 1 : 0, d.k()};
}

bool one_line_less(const GroupElement& a, const GroupElement& b) {
  return one_line_key(a) < one_line_key(b);
}

size_t ElemHash::operator()(const GroupElement& w) const {
  size_t h = 1469598103934665603ull;
  for (int v : element_key(w)) {
    h ^= static_cast<size_t>(static_cast<unsigned int>(v));
    h *= 1099511628211ull;
  }
  return h;
}

// ---------- printing ----------

namespace {

// canonical traversal order on signed points: 1 < -1 < 2 < -2 < ...
int signed_order_key(int p) { return 2 * (std::abs(p) - 1) + (p < 0 ? 1 : 0); }

std::string cycle_body(const std::vector<int>& cyc) {
  std::string s = "(";
  for (size_t i = 0; i < cyc.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(cyc[i]);
  }
  return s + ")";
}

std::string perm_cycle_string(const Perm& p) {
  auto cycles = p.cycles();
  if (cycles.empty()) return "e";
  std::string s;
  for (const auto& cyc : cycles) {
    std::vector<int> c;
    for (int x : cyc) c.push_back(x + 1);
    s += cycle_body(c);
  }
  return s;
}

std::string signed_cycle_string(const SignedPerm& w) {
  std::vector<int> pts;
  for (int i = 1; i <= w.n(); ++i) {
    pts.push_back(i);
    pts.push_back(-i);
  }
  std::sort(pts.begin(), pts.end(), [](int a, int b) { return signed_order_key(a) < signed_order_key(b); });
  std::vector<char> visited(2 * w.n(), 0);
  auto slot = [&](int p) { return signed_order_key(p); };
  std::string s;
  for (int p : pts) {
    if (visited[slot(p)] || w.apply(p) == p) continue;
    std::vector<int> cyc;
    int q = p;
    do {
      visited[slot(q)] = 1;
      cyc.push_back(q);
      q = w.apply(q);
    } while (q != p);
    bool self_mirrored = true;
    for (int x : cyc)
      if (!visited[slot(-x)]) {
        self_mirrored = false;
        break;
      }
    if (self_mirrored) {
      s += cycle_body(cyc);
    } else {
      for (int x : cyc) visited[slot(-x)] = 1;
      s += "(" + cycle_body(cyc) + ")";
    }
  }
  return s.empty() ? "e" : s;
}

std::string colored_string(const ColoredPerm& c) {
  std::string s = "[";
  for (int i = 0; i < c.n(); ++i) {
    if (i) s += ",";
    s += std::to_string(c.colors()[i]);
  }
  s += "; ";
  for (int i = 0; i < c.n(); ++i) {
    if (i) s += " ";
    s += std::to_string(c.perm().apply(i) + 1);
  }
  return s + "]";
}

}  // namespace

std::string to_string(const GroupElement& w) {
  if (const auto* p = std::get_if<Perm>(&w)) return perm_cycle_string(*p);
  if (const auto* s = std::get_if<SignedPerm>(&w)) return signed_cycle_string(*s);
  if (const auto* c = std::get_if<ColoredPerm>(&w)) return colored_string(*c);
  const auto& d = std::get<DihedralElem>(w);
  if (d.is_identity()) return "e";
  return (d.reflection() ? "s" : "r") + std::to_string(d.k());
}

}  // namespace absord
