#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "formula.hpp"

namespace sahl {

using WorldSet = std::uint32_t;

constexpr WorldSet full_set(int n) { return n >= 32 ? ~WorldSet{0} : (WorldSet{1} << n) - 1; }
constexpr WorldSet singleton(int w) { return WorldSet{1} << w; }
constexpr bool contains(WorldSet s, int w) { return (s >> w) & 1U; }

struct Frame {
  int n = 1;
  std::vector<WorldSet> succ;  // succ[w] = R[w]

  Frame() : succ(1, 0) {}
  explicit Frame(int size);
  // Bit i*n+j of mask is R(i,j).
  static Frame from_mask(int n, std::uint64_t mask);
  // "n;i->j,i->k"
  static Frame parse(std::string_view literal);

  bool rel(int i, int j) const { return contains(succ[i], j); }
  void add(int i, int j) { succ[i] |= singleton(j); }
  WorldSet all() const { return full_set(n); }
  std::uint64_t mask() const;
  std::string literal() const;
  Frame converse() const;

  friend bool operator==(const Frame&, const Frame&) = default;
};

using Valuation = std::map<std::string, WorldSet>;
using Assignment = std::map<std::string, int>;
// Interpretation of unary predicate symbols; absent symbols denote the empty set.
using Interpretation = std::map<std::string, WorldSet>;

WorldSet m_R(const Frame& F, WorldSet X);
WorldSet l_R(const Frame& F, WorldSet X);
// R^k[X]: worlds reachable from X in exactly k steps.
WorldSet image(const Frame& F, WorldSet X, std::size_t k = 1);

WorldSet extension(const ModalFormula& f, const Frame& F, const Valuation& V);

// Defaults: frame size cap from SAHL_MAX_FRAME_N (4 if unset), 16 valuation bits.
int frame_size_cap();
constexpr int valuation_bit_cap = 16;

// A modal formula compiled against a fixed letter order.
class ModalProgram {
 public:
  explicit ModalProgram(const ModalFormula& f);
  ModalProgram(const ModalFormula& f, std::vector<std::string> letters);

  const std::vector<std::string>& letters() const { return letters_; }
  WorldSet eval(const Frame& F, std::span<const WorldSet> values) const;

  // Worlds w with F, w ⊩ f. Throws ResourceCap if n·|letters| > cap.
  WorldSet valid_worlds(const Frame& F, int bit_cap = valuation_bit_cap) const;

 private:
  struct Op {
    ModalKind kind;
    int a = -1;
    int b = -1;
    int letter = -1;
  };
  int compile(const ModalFormula& f);

  std::vector<std::string> letters_;
  std::vector<Op> ops_;
};

bool frame_valid_at(const Frame& F, int w, const ModalFormula& f);
bool frame_valid(const Frame& F, const ModalFormula& f);

// A first-order formula compiled to variable slots.
class FoProgram {
 public:
  explicit FoProgram(const FoFormula& f);

  // Slot for a free variable, or -1 if it does not occur free.
  int slot_of(const std::string& var) const;
  const std::vector<std::string>& free_slots() const { return free_; }
  const std::vector<std::string>& predicates() const { return preds_; }
  std::size_t slot_count() const { return slot_count_; }

  // env holds one world per slot; free slots first in free_slots() order.
  bool eval(const Frame& F, std::vector<int>& env, std::span<const WorldSet> preds) const;
  // Convenience: the formula's only free variable (if any) bound to w.
  bool eval_at(const Frame& F, int w, std::span<const WorldSet> preds = {}) const;

 private:
  struct Node {
    FoKind kind;
    int s0 = -1;
    int s1 = -1;
    int pred = -1;
    std::vector<int> kids;
  };
  int compile(const FoFormula& f, std::map<std::string, int>& scope);
  bool run(int node, const Frame& F, std::vector<int>& env, std::span<const WorldSet> preds) const;

  std::vector<Node> nodes_;
  std::vector<std::string> free_;
  std::vector<std::string> preds_;
  std::size_t slot_count_ = 0;
  int root_ = -1;
};

bool eval_fo(const Frame& F, const Assignment& a, const FoFormula& f, const Interpretation& I = {});
bool eval_so(const Frame& F, const Assignment& a, const SoFormula& f);

// Lazily enumerates all 2^(n²) frames in relation-mask order.
class FrameRange {
 public:
  class iterator {
   public:
    iterator(int n, std::uint64_t mask) : n_(n), mask_(mask) {}
    Frame operator*() const { return Frame::from_mask(n_, mask_); }
    iterator& operator++() {
      ++mask_;
      return *this;
    }
    bool operator!=(const iterator& o) const { return mask_ != o.mask_; }

   private:
    int n_;
    std::uint64_t mask_;
  };

  FrameRange(int n, std::uint64_t count) : n_(n), count_(count) {}
  iterator begin() const { return {n_, 0}; }
  iterator end() const { return {n_, count_}; }
  std::uint64_t size() const { return count_; }

 private:
  int n_;
  std::uint64_t count_;
};

FrameRange enumerate_frames(int n, int cap = frame_size_cap());

// Seeded random frames of size n, reproducible across runs.
constexpr std::uint64_t default_seed = 20240917;
std::vector<Frame> sample_frames(int n, std::size_t count, std::uint64_t seed = default_seed);

enum class Direction {
  ModalOnly,  // frame validates the formula at w but the correspondent fails
  FoOnly,     // correspondent holds at w but the formula is refuted
};

struct Counterexample {
  Frame frame;
  int world = 0;
  Direction direction = Direction::ModalOnly;
};

struct Verdict {
  bool pass = true;
  std::optional<Counterexample> counterexample;
  std::uint64_t frames_checked = 0;
};

std::string describe(const Counterexample& c);

Verdict check_local_correspondence(const ModalFormula& f, const FoFormula& alpha, int max_n,
                                   std::size_t sample4 = 0, std::uint64_t seed = default_seed);

}  // namespace sahl
