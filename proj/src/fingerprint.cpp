#include "hnp/fingerprint.hpp"

#include <numeric>

namespace hnp {

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::size_t count_of_order(const Fingerprint& f, int o) {
  for (const auto& [ord, cnt] : f.element_orders)
    if (ord == o) return cnt;
  return 0;
}

bool has_order(const Fingerprint& f, int o) { return count_of_order(f, o) > 0; }

std::uint64_t center_order(const Subgroup& h) {
  const Group& g = *h.parent();
  std::uint64_t c = 0;
  for (ElementIndex z : h.members_list()) {
    bool central = true;
    for (ElementIndex w : h.witness_generators())
      if (g.mul(z, w) != g.mul(w, z)) {
        central = false;
        break;
      }
    if (central) ++c;
  }
  return c;
}

int derived_length(const Subgroup& h) {
  Subgroup cur = h;
  int len = 0;
  while (cur.order() > 1) {
    Subgroup next = derived_subgroup(cur);
    if (next.order() == cur.order()) return -1;  // perfect core
    cur = next;
    ++len;
  }
  return len;
}

std::string abelian_label(const Fingerprint& f) {
  // abelian groups of the orders that occur in the table
  std::uint64_t n = f.order;
  std::uint64_t e = f.exponent;
  if (e == n) return "C" + std::to_string(n);
  if (n == 4) return "C2 x C2";
  if (n == 8) return e == 4 ? "C4 x C2" : "C2 x C2 x C2";
  if (n == 9) return "C3 x C3";
  if (n == 12) return "C6 x C2";
  if (n == 16 && e == 2) return "C2 x C2 x C2 x C2";
  if (n == 18) return "C6 x C3";
  if (n == 36 && e == 6) return "C6 x C6";
  return "";
}

std::string nonabelian_label(const Fingerprint& f) {
  const std::uint64_t n = f.order;
  const std::size_t inv = count_of_order(f, 2);
  switch (n) {
    case 6:
      return "S3";
    case 8:
      if (inv == 1) return "Q8";
      if (inv == 5) return "D8";
      break;
    case 10:
      return "D10";
    case 12:
      if (inv == 3) return "A4";
      if (inv == 7) return "D12";
      if (inv == 1) return "C3 : C4";
      break;
    case 16:
      if (f.exponent == 8 && inv == 5) return "QD16";
      break;
    case 18:
      if (f.exponent % 9 == 0) return "D18";
      if (inv == 9) return "(C3 x C3) : C2";
      if (inv == 3) return "C3 x S3";
      break;
    case 20:
      if (inv == 5 && has_order(f, 4)) return "C5 : C4";
      if (inv == 11) return "D20";
      break;
    case 24:
      if (inv == 1 && !has_order(f, 8) && count_of_order(f, 3) == 8) return "SL(2,3)";
      if (inv == 9 && f.center_order == 1) return "S4";
      break;
    case 36:
      if (inv == 15) return "S3 x S3";
      if (inv == 9 && has_order(f, 4) && !has_order(f, 6)) return "(C3 x C3) : C4";
      break;
    case 48:
      if (inv == 13 && has_order(f, 8) && f.center_order == 2) return "GL(2,3)";
      break;
    case 55:
      return "C11 : C5";
    case 60:
      if (f.derived_length == -1) return "A5";
      break;
    case 72:
      if (has_order(f, 8) && inv == 9) return "(C3 x C3) : C8";
      if (inv == 9 && has_order(f, 4)) return "(C3 x C3) : Q8";
      if (inv == 21) return "(S3 x S3) : C2";
      break;
    case 120:
      if (inv == 25) return "S5";
      break;
    case 144:
      if (inv == 21 && has_order(f, 8)) return "(C3 x C3) : QD16";
      break;
    case 360:
      if (f.derived_length == -1) return "A6";
      break;
    case 660:
      if (f.derived_length == -1) return "PSL(2,11)";
      break;
    case 720:
      if (inv == 45 && has_order(f, 8) && f.derived_length == -1) return "A6 . C2";
      break;
    case 7920:
      if (f.derived_length == -1) return "M11";
      break;
    default:
      break;
  }
  return "";
}

}  // namespace

Fingerprint fingerprint(const Subgroup& h) {
  const Group& g = *h.parent();
  Fingerprint f;
  f.order = h.order();
  f.element_orders = element_order_histogram(h);

  long long e = 1;
  for (const auto& [ord, cnt] : f.element_orders) e = std::lcm(e, static_cast<long long>(ord));
  f.exponent = static_cast<std::uint64_t>(e);

  f.abelian = true;
  const auto& gens = h.witness_generators();
  for (std::size_t i = 0; i < gens.size() && f.abelian; ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (g.mul(gens[i], gens[j]) != g.mul(gens[j], gens[i])) {
        f.abelian = false;
        break;
      }

  f.center_order = f.abelian ? f.order : center_order(h);
  f.derived_length = f.abelian ? (f.order > 1 ? 1 : 0) : derived_length(h);

  if (f.order == 1) {
    f.label = "1";
    return f;
  }
  if (is_prime(f.order)) {
    f.label = "C" + std::to_string(f.order);
    return f;
  }
  std::string name = f.abelian ? abelian_label(f) : nonabelian_label(f);
  f.label = name.empty() ? "order-" + std::to_string(f.order) + "-unrecognized" : name;
  return f;
}

}  // namespace hnp
