#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace clasp2 {

/// Exponents of the Dehn twists about the boundary curves C1, C2, C3 of the
/// three-holed sphere: monodromy T1^a T2^b T3^c.
struct OpenBookTriple {
  int a = 0;
  int b = 0;
  int c = 0;
  friend auto operator<=>(const OpenBookTriple&, const OpenBookTriple&) = default;
};

std::string to_string(const OpenBookTriple& t);
/// Parses "a,b,c".
OpenBookTriple parse_triple(const std::string& text);

/// Letters are +-1 for x^{+-1} and +-2 for y^{+-1}.
using Word = std::vector<int>;

Word free_reduce(Word w);
std::string word_to_string(const Word& w);

/// Two-generator presentation; relators are kept freely reduced.
struct Presentation {
  int num_generators = 2;
  std::vector<Word> relators;
};

/// <x, y | (xy)^a x^b, (xy)^a y^c>.
Presentation pi1_presentation(const OpenBookTriple& t);

/// Invariant factors of an integer matrix (diagonal of the Smith normal form,
/// nonzero entries only, in divisibility order).
std::vector<std::int64_t> smith_invariants(std::vector<std::vector<std::int64_t>> m);

/// Order of H1 from the exponent-sum matrix; 0 when H1 is infinite.
std::int64_t abelianization_order(const Presentation& p);

/// Order of the group by coset enumeration over the trivial subgroup
/// (HLT with lookahead); nullopt once more than max_cosets are needed.
std::optional<std::int64_t> todd_coxeter(const Presentation& p, int max_cosets = 20000);

/// Images of the generators in a nontrivial finite group.
struct Witness {
  std::string target;             // "S4", "Z7", ...
  std::vector<std::string> images;  // cycle notation or residues
};

/// Exhaustive search for a homomorphism with nontrivial image into S2..S5
/// and Z/n for 2 <= n <= max_target_order.
std::optional<Witness> nontriviality_witness(const Presentation& p, int max_target_order = 120);

enum class Verdict { trivial, nontrivial, inconclusive };
std::string to_string(Verdict v);

struct Budgets {
  int max_cosets = 20000;
  int max_target_order = 120;
};

struct Classification {
  OpenBookTriple triple;
  Verdict verdict = Verdict::inconclusive;
  std::int64_t h1_order = 0;                  // 0: infinite
  std::optional<std::int64_t> group_order;    // from coset enumeration
  std::optional<Witness> witness;
  std::string method;                         // "abelianization", "todd-coxeter", "homomorphism"
};

Classification classify_triple(const OpenBookTriple& t, const Budgets& budgets = {});

/// Classifies each triple; jobs > 1 spreads the work over that many threads.
std::vector<Classification> classify_all(const std::vector<OpenBookTriple>& triples, const Budgets& budgets = {},
                                         int jobs = 1);

/// All triples with |a| <= |b| <= |c| <= range.
std::vector<OpenBookTriple> sorted_triples(int range);

/// Membership in the list of monodromies with trivial fundamental group,
/// allowing any relabelling of the boundary curves.
bool in_trivial_list(const OpenBookTriple& t);

struct OpenBookRow {
  OpenBookTriple triple;
  std::string family;  // "H+#H+", "P(2,-4,-2)", "mirror P(2,4,-2)", "L^ex", ...
  std::string monodromy_case;  // "i", "ii", "iii"
};

/// Fibered links bounding the pants for each trivial triple of `sorted_triples(range)`.
std::vector<OpenBookRow> s3_openbook_report(int range, const Budgets& budgets = {}, int jobs = 1);

}  // namespace clasp2
