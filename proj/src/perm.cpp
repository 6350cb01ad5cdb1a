#include "ppcp/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ppcp/util.hpp"

namespace ppcp {

Perm::Perm(int degree) {
  if (degree < 1) throw std::invalid_argument("Perm: degree must be positive");
  images_.resize(degree);
  std::iota(images_.begin(), images_.end(), 0);
}

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  if (images_.empty()) throw std::invalid_argument("Perm: degree must be positive");
  std::vector<char> seen(images_.size(), 0);
  for (int x : images_) {
    if (x < 0 || x >= degree() || seen[x]) throw std::invalid_argument("Perm: images are not a bijection");
    seen[x] = 1;
  }
}

Perm Perm::from_cycles(std::string_view text, int degree) {
  if (degree < 1) throw std::invalid_argument("Perm: degree must be positive");
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  std::vector<char> used(degree, 0);

  std::size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument("Perm: expected '(' in cycle notation");
    ++i;
    std::vector<int> cycle;
    for (;;) {
      skip_ws();
      if (i >= text.size()) throw std::invalid_argument("Perm: unterminated cycle");
      if (text[i] == ')') { ++i; break; }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw std::invalid_argument("Perm: malformed cycle");
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) v = v * 10 + (text[i++] - '0');
      if (v < 1 || v > degree) throw std::invalid_argument("Perm: point " + std::to_string(v) + " exceeds degree");
      if (used[v - 1]) throw std::invalid_argument("Perm: point " + std::to_string(v) + " repeated across cycles");
      used[v - 1] = 1;
      cycle.push_back(v - 1);
    }
    for (std::size_t j = 0; j < cycle.size(); ++j) images[cycle[j]] = cycle[(j + 1) % cycle.size()];
    skip_ws();
  }
  return Perm(std::move(images));
}

Perm Perm::operator*(const Perm& rhs) const {
  if (degree() != rhs.degree()) throw std::invalid_argument("Perm: degree mismatch in composition");
  std::vector<int> r(images_.size());
  for (int x = 0; x < degree(); ++x) r[x] = images_[rhs.images_[x]];
  return Perm(std::move(r));
}

Perm Perm::inverse() const {
  std::vector<int> r(images_.size());
  for (int x = 0; x < degree(); ++x) r[images_[x]] = x;
  return Perm(std::move(r));
}

bool Perm::is_identity() const {
  for (int x = 0; x < degree(); ++x)
    if (images_[x] != x) return false;
  return true;
}

int Perm::order() const {
  int ord = 1;
  for (const auto& c : cycles()) ord = std::lcm(ord, static_cast<int>(c.size()));
  return ord;
}

std::vector<std::vector<int>> Perm::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(images_.size(), 0);
  for (int x = 0; x < degree(); ++x) {
    if (seen[x] || images_[x] == x) continue;
    std::vector<int> c;
    int y = x;
    while (!seen[y]) {
      seen[y] = 1;
      c.push_back(y);
      y = images_[y];
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string Perm::cycle_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (j) os << ' ';
      os << c[j] + 1;
    }
    os << ')';
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Perm& p) { return os << p.cycle_string(); }

std::size_t PermHash::operator()(const Perm& p) const { return hash_range(p.images()); }

} // namespace ppcp
