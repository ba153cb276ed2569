#include "obembed/fourman.hpp"

#include <algorithm>
#include <string>

#include "obembed/error.hpp"

namespace obembed {

namespace {

std::string superscript(long long n) {
  static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string s;
  for (char c : std::to_string(n)) s += digits[c - '0'];
  return s;
}

std::string summand(std::int64_t count, const std::string& piece) {
  if (count == 1) return piece;
  return "#" + superscript(count) + "(" + piece + ")";
}

}  // namespace

std::size_t PageForm::sphere_count() const {
  return static_cast<std::size_t>(std::count_if(
      atoms.begin(), atoms.end(), [](const PageAtom& a) { return a.kind == AtomKind::SphereCyl; }));
}

std::size_t PageForm::circle_count() const { return atoms.size() - sphere_count(); }

FourManifoldForm::FourManifoldForm(int m, std::int64_t s1_cross_sphere, std::int64_t trivial_bundle,
                                   std::int64_t twisted_bundle)
    : m_(m),
      s1_cross_sphere_(s1_cross_sphere),
      trivial_bundle_(trivial_bundle),
      twisted_bundle_(twisted_bundle) {
  if (m < 1) throw InvalidInput("atom dimension m must be at least 1");
  if (s1_cross_sphere < 0 || trivial_bundle < 0 || twisted_bundle < 0) {
    throw InvalidInput("summand counts must be non-negative");
  }
}

std::string FourManifoldForm::notation() const {
  if (is_sphere()) return "S" + superscript(m_ + 2);
  const std::string sm = "S" + superscript(m_);
  std::string out;
  auto append = [&out](const std::string& piece) {
    if (!out.empty()) out += " # ";
    out += piece;
  };
  if (s1_cross_sphere_) append(summand(s1_cross_sphere_, "S¹×S" + superscript(m_ + 1)));
  if (trivial_bundle_) append(summand(trivial_bundle_, "S²×" + sm));
  if (twisted_bundle_) append(summand(twisted_bundle_, "S²×̃" + sm));
  return out;
}

FourManifoldForm connected_sum(const FourManifoldForm& a, const FourManifoldForm& b) {
  if (a.m() != b.m()) throw DimensionMismatch("connected sum of manifolds of different dimension");
  return FourManifoldForm(a.m(), a.s1_cross_sphere() + b.s1_cross_sphere(),
                          a.trivial_bundle() + b.trivial_bundle(),
                          a.twisted_bundle() + b.twisted_bundle());
}

FourManifoldForm evaluate_open_book(const PageForm& page, const MonodromyForm& mono) {
  if (page.atoms.empty()) {
    if (!mono.twist_exponents.empty() || !mono.pushes.empty()) {
      throw InvalidMonodromy("monodromy data on an empty page");
    }
    return FourManifoldForm::sphere();
  }
  const int m = page.atoms.front().m;
  for (const auto& atom : page.atoms) {
    if (atom.m != m) throw DimensionMismatch("page atoms have different dimensions");
  }
  if (m < 1) throw InvalidInput("atom dimension m must be at least 1");

  const std::size_t spheres = page.sphere_count();
  const std::size_t circles = page.circle_count();
  if (mono.twist_exponents.size() != spheres) {
    throw InvalidMonodromy("expected " + std::to_string(spheres) + " twist exponents, got " +
                           std::to_string(mono.twist_exponents.size()));
  }

  std::vector<bool> circle_used(circles, false);
  std::vector<bool> sphere_used(spheres, false);
  for (const auto& p : mono.pushes) {
    if (p.circle < 1 || p.circle > circles || p.sphere < 1 || p.sphere > spheres) {
      throw InvalidMonodromy("dangling push index (" + std::to_string(p.circle) + "," +
                             std::to_string(p.sphere) + ")");
    }
    if (circle_used[p.circle - 1] || sphere_used[p.sphere - 1]) {
      throw InvalidMonodromy("atom used by more than one push");
    }
    circle_used[p.circle - 1] = true;
    sphere_used[p.sphere - 1] = true;
  }

  std::int64_t s1 = 0;
  std::int64_t trivial = 0;
  std::int64_t twisted = 0;
  for (std::size_t c = 0; c < circles; ++c)
    if (!circle_used[c]) ++s1;
  for (std::size_t s = 0; s < spheres; ++s) {
    if (sphere_used[s]) continue;  // absorbed into an S^{m+2} summand
    if (mono.twist_exponents[s] % 2 == 0) {
      ++trivial;
    } else {
      ++twisted;
    }
  }
  return FourManifoldForm(m, s1, trivial, twisted);
}

FourManifoldForm normalize(const FourManifoldForm& form) {
  if (form.twisted_bundle() >= 1 && form.s1_cross_sphere() == 0) {
    return FourManifoldForm(form.m(), 0, 0, form.trivial_bundle() + form.twisted_bundle());
  }
  return form;
}

bool equal(const FourManifoldForm& a, const FourManifoldForm& b) {
  if (a.m() != b.m()) throw NotComparable("forms of different dimension");
  return normalize(a) == normalize(b);
}

Z2Vector twist_image(std::span<const int> sphere, std::size_t k) {
  if (sphere.empty()) throw InvalidInput("twist_image needs a nonempty set of core spheres");
  std::vector<int> members(sphere.begin(), sphere.end());
  std::sort(members.begin(), members.end());
  if (std::adjacent_find(members.begin(), members.end()) != members.end()) {
    throw InvalidInput("core sphere listed twice in a tubing");
  }
  return Z2Vector::indicator(k, members);
}

Z2Vector boundary_sphere_sum(std::span<const std::vector<int>> inner, std::size_t k) {
  Z2Vector sum(k);
  std::vector<int> outer;
  for (const auto& s : inner) {
    sum += twist_image(s, k);
    outer.insert(outer.end(), s.begin(), s.end());
  }
  if (outer.empty()) return sum;
  // Inner spheres of a D^3_r are disjoint, so the tube of all of them is a
  // tubing set again; twist_image rejects overlaps.
  sum += twist_image(outer, k);
  return sum;
}

}  // namespace obembed
