#include "obembed/spun.hpp"

#include "obembed/error.hpp"

namespace obembed {

std::string EmbeddingReport::raw_notation() const {
  return "W_{" + std::to_string(even_count()) + "," + std::to_string(odd_count()) + "}";
}

std::string EmbeddingReport::note() const {
  return "each atom OB(S^m x [0,1], σ^β) embeds in OB(S^(m+1) x [0,1], σ^β), so the same parities "
         "give a spun embedding one dimension up";
}

EmbeddingReport embedding_target(const PlanarPage& page, const TwistWord& word) {
  if (word.has_push()) {
    throw NotApplicable("word contains push letters; use the S^4 certificate instead");
  }
  EmbeddingReport r;
  r.page = page;
  r.exponents = exponent_vector(word, page);
  r.parity = r.exponents.parity();
  PageForm form;
  form.atoms.assign(page.size(), sphere_cyl(2));
  MonodromyForm mono{r.exponents.entries, {}};
  r.raw = evaluate_open_book(form, mono);
  r.normalized = normalize(r.raw);
  return r;
}

EmbeddingReport embedding_target(const TwistWord& word) {
  return embedding_target(word.page(), word);
}

bool spin_target(const PlanarPage& page, const TwistWord& word) {
  return parity_vector(word, page).is_zero();
}

bool spin_target(const TwistWord& word) { return spin_target(word.page(), word); }

std::string S4Certificate::target_notation() const {
  std::size_t n = a_exponents.size();
  std::string page = n == 0 ? "D⁴" : "S¹×D² ♮ S²×[0,1]";
  if (n > 1) page = "♮^" + std::to_string(n) + "(" + page + ")";
  std::string out = "OB(" + page + ", twists ∘ pushes)";
  if (target) out += " = " + target->notation();
  return out;
}

S4Certificate s4_certificate(const PlanarPage& page, const TwistWord& word) {
  if (word.page() != page) throw PageMismatch("word and page differ");
  if (page.inner_count() % 2 != 0) {
    throw MalformedPairing("page must have an even number of holes a_1, b_1, ..., a_n, b_n");
  }
  std::size_t n = page.size() / 2;

  std::vector<int> pushes_seen(n, 0);
  std::vector<Letter> twists;
  for (const auto& letter : word.letters()) {
    if (!letter.is_push()) {
      twists.push_back(letter);
      continue;
    }
    const auto& p = std::get<PlanarPush>(letter.generator);
    bool paired = p.boundary % 2 == 0 && p.around == CurveClass{p.boundary - 1};
    if (!paired || letter.exponent != 1) {
      throw MalformedPairing("push must have the form P{b_j|a_j} = P{2j|2j-1} with exponent 1");
    }
    auto j = static_cast<std::size_t>(p.boundary / 2 - 1);
    if (++pushes_seen[j] > 1) {
      throw MalformedPairing("pair " + std::to_string(j + 1) + " is pushed more than once");
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (pushes_seen[j] == 0) {
      throw MalformedPairing("pair " + std::to_string(j + 1) + " has no push");
    }
  }

  S4Certificate cert;
  auto e = exponent_vector(std::span<const Letter>(twists), page);
  for (std::size_t j = 0; j < n; ++j) {
    cert.a_exponents.push_back(e.entries[2 * j]);
    cert.b_exponents.push_back(e.entries[2 * j + 1]);
  }

  cert.applicable = true;
  for (std::size_t j = 0; j < n; ++j) {
    if (cert.b_exponents[j] % 2 != 0) {
      cert.applicable = false;
      cert.reason = "condition not applicable: twist exponent sum around b_" +
                    std::to_string(j + 1) + " is odd";
      return cert;
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (cert.a_exponents[j] % 2 == 0) {
      cert.reason = "twist exponent sum around a_" + std::to_string(j + 1) + " is even";
      return cert;
    }
  }

  PageForm form;
  MonodromyForm mono;
  for (std::size_t j = 0; j < n; ++j) {
    form.atoms.push_back(circle_disk(2));
    form.atoms.push_back(sphere_cyl(2));
    mono.twist_exponents.push_back(cert.b_exponents[j]);
    mono.pushes.push_back({j + 1, j + 1});
  }
  cert.target = normalize(evaluate_open_book(form, mono));
  cert.certified = cert.target->is_sphere();
  cert.reason = cert.certified ? "every a_j exponent sum is odd" : "evaluated page is not a sphere";
  return cert;
}

S4Certificate s4_certificate(const TwistWord& word) { return s4_certificate(word.page(), word); }

}  // namespace obembed
