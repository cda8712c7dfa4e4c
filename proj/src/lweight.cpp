#include "qaffin/lweight.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace qaffin {

LMonomial LMonomial::var(int node, int shift, long long exp) {
  LMonomial m;
  if (exp != 0) m.e_[{node, shift}] = exp;
  return m;
}

long long LMonomial::exponent(int node, int shift) const {
  auto it = e_.find({node, shift});
  return it == e_.end() ? 0 : it->second;
}

LMonomial LMonomial::operator*(const LMonomial& o) const {
  LMonomial r = *this;
  for (const auto& [k, v] : o.e_) {
    long long nv = r.exponent(k.first, k.second) + v;
    if (nv == 0)
      r.e_.erase(k);
    else
      r.e_[k] = nv;
  }
  return r;
}

LMonomial LMonomial::inverse() const { return pow(-1); }

LMonomial LMonomial::pow(long long k) const {
  LMonomial r;
  if (k == 0) return r;
  for (const auto& [key, v] : e_) r.e_[key] = v * k;
  return r;
}

Weight LMonomial::weight(int rank) const {
  Weight w(rank);
  for (const auto& [k, v] : e_) {
    if (k.first < 1 || k.first > rank)
      throw std::invalid_argument("monomial node outside diagram");
    w[k.first] += v;
  }
  return w;
}

bool LMonomial::dominant() const {
  for (const auto& [k, v] : e_)
    if (v < 0) return false;
  return true;
}

LMonomial LMonomial::restrict_to(NodeSet J) const {
  LMonomial r;
  for (const auto& [k, v] : e_)
    if (J.contains(k.first)) r.e_[k] = v;
  return r;
}

int LMonomial::max_shift() const {
  if (e_.empty()) throw std::invalid_argument("identity monomial has no top shift");
  int best = e_.begin()->first.second;
  for (const auto& [k, v] : e_) best = std::max(best, k.second);
  return best;
}

bool LMonomial::right_negative() const {
  int top = max_shift();
  for (const auto& [k, v] : e_)
    if (k.second == top && v > 0) return false;
  return true;
}

std::string LMonomial::str() const {
  if (e_.empty()) return "1";
  std::string out;
  for (const auto& [k, v] : e_) {
    if (!out.empty()) out += "*";
    out += "Y[" + std::to_string(k.first) + "," + std::to_string(k.second) + "]";
    if (v != 1) out += "^" + std::to_string(v);
  }
  return out;
}

LMonomial LMonomial::parse(const std::string& text) {
  LMonomial m;
  if (text == "1") return m;
  size_t pos = 0;
  auto fail = [&]() { throw std::invalid_argument("bad monomial text: " + text); };
  auto read_int = [&]() {
    size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail();
    return std::stoll(text.substr(start, pos - start));
  };
  while (pos < text.size()) {
    if (text.compare(pos, 2, "Y[") != 0) fail();
    pos += 2;
    long long node = read_int();
    if (pos >= text.size() || text[pos] != ',') fail();
    ++pos;
    long long shift = read_int();
    if (pos >= text.size() || text[pos] != ']') fail();
    ++pos;
    long long exp = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      exp = read_int();
    }
    m = m * var(static_cast<int>(node), static_cast<int>(shift), exp);
    if (pos < text.size()) {
      if (text[pos] != '*') fail();
      ++pos;
    }
  }
  return m;
}

LMonomial q_string(int node, int shift, long long length) {
  if (length < 0) throw std::invalid_argument("q-string length must be nonnegative");
  LMonomial m;
  for (long long t = 0; t < length; ++t)
    m = m * LMonomial::var(node, shift + 2 * static_cast<int>(t));
  return m;
}

LMonomial simple_lroot(const Diagram& d, int node, int shift) {
  LMonomial m = LMonomial::var(node, shift - 1) * LMonomial::var(node, shift + 1);
  for (int j : d.neighbors(node)) m = m * LMonomial::var(j, shift, -1);
  return m;
}

DrinfeldSpec DrinfeldSpec::make(std::vector<KRString> strings) {
  NodeSet seen;
  for (const auto& s : strings) {
    if (s.length < 1) throw std::invalid_argument("string length must be positive");
    if (seen.contains(s.node)) throw std::invalid_argument("at most one string per node");
    seen.insert(s.node);
  }
  std::sort(strings.begin(), strings.end());
  return DrinfeldSpec{std::move(strings)};
}

LMonomial DrinfeldSpec::expand() const {
  LMonomial m;
  for (const auto& s : strings) m = m * q_string(s.node, s.shift, s.length);
  return m;
}

Weight DrinfeldSpec::weight(int rank) const {
  Weight w(rank);
  for (const auto& s : strings) {
    if (s.node < 1 || s.node > rank)
      throw std::invalid_argument("string node outside diagram");
    w[s.node] += s.length;
  }
  return w;
}

const KRString* DrinfeldSpec::at(int node) const {
  for (const auto& s : strings)
    if (s.node == node) return &s;
  return nullptr;
}

}  // namespace qaffin
