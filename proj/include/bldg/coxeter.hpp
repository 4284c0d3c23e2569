#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace bldg {

// Word in the generators, letters are generator indices 0..rank-1.
using Word = std::vector<std::uint8_t>;

// Generator subsets J <= S as bitmasks.
using TypeMask = std::uint32_t;

struct CoxeterMatrix {
  int rank = 0;
  // m[i][j]: order of s_i s_j; m[i][i] = 1, m[i][j] = m[j][i] >= 2 for i != j.
  // 0 encodes infinity (no braid relation); such types blow the bound.
  std::vector<std::vector<int>> m;

  static CoxeterMatrix type_a(int rank);
  // Accepts "A1".."A8".
  static CoxeterMatrix from_name(const std::string& name);

  void validate() const;
  bool no_isolated_nodes() const;
  bool connected_diagram() const;
};

// Finite Coxeter group enumerated from its matrix. The word problem is solved
// by Tits' theorem: a word is reduced iff no braid-move image of it carries an
// adjacent equal pair, and all reduced words of one element form a single
// braid-move class. Normal form = lexicographically least reduced word.
// Immutable after construction; all queries pure.
class CoxeterGroup {
 public:
  static constexpr int kDefaultMaxOrder = 40320;

  explicit CoxeterGroup(CoxeterMatrix matrix, int max_order = kDefaultMaxOrder);

  const CoxeterMatrix& matrix() const { return matrix_; }
  int rank() const { return matrix_.rank; }
  int size() const { return int(words_.size()); }
  int identity() const { return 0; }

  const Word& word(int w) const { return words_[w]; }
  int length(int w) const { return int(words_[w].size()); }

  int right(int w, int s) const { return right_[w][s]; }   // w * s
  int left(int s, int w) const;                            // s * w
  int multiply(int w1, int w2) const;
  int inverse(int w) const;
  int product_of(const Word& word) const;

  int longest_element() const { return longest_; }

  bool is_reduced(const Word& w) const;
  // All reduced words of w, sorted.
  std::vector<Word> reduced_decompositions(int w) const;

  // Elements of the standard parabolic W_J, ascending indices.
  std::vector<int> parabolic(TypeMask J) const;

  struct DoubleCoset {
    TypeMask J = 0, K = 0;
    int rep = 0;  // the unique minimal-length element of W_J w W_K
  };
  DoubleCoset double_coset_rep(TypeMask J, int w, TypeMask K) const;
  std::vector<int> double_coset_elements(TypeMask J, int w, TypeMask K) const;

 private:
  Word normalize(Word w) const;
  std::set<Word> braid_class(const Word& w) const;

  CoxeterMatrix matrix_;
  std::vector<Word> words_;                 // normal forms, index = element id
  std::vector<std::vector<int>> right_;    // right Cayley table
  int longest_ = 0;
};

// The Coxeter complex Sigma(W,S): chambers are group elements, the type-s
// vertex of chamber w is the coset w W_{S \ {s}} (identified by its minimal
// element). Thin: every panel lies in exactly two chambers.
struct CoxeterComplex {
  std::shared_ptr<const CoxeterGroup> group;
  std::vector<int> vertex_types;                   // vid -> type
  std::vector<int> vertex_coset_min;               // vid -> minimal coset element
  std::vector<std::vector<int>> chamber_vertices;  // chamber (= element id) -> [type] = vid
};

CoxeterComplex coxeter_complex(std::shared_ptr<const CoxeterGroup> group);

// Idempotent endomorphism folding C' onto C across their common wall;
// image = the root (half-complex) containing C.
struct FoldingMap {
  int onto_chamber = 0;    // C
  int folded_chamber = 0;  // C', mapped onto C
  int color = 0;           // the shared panel's cotype
  std::vector<int> mapping;  // chamber -> chamber
  std::vector<int> image;    // sorted chamber set (the root)
};

FoldingMap folding_along(const CoxeterComplex& sigma, int c, int c_prime);

}  // namespace bldg
