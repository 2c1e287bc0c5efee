#include "semantics.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "errors.hpp"

namespace sahl {

Frame::Frame(int size) : n(size), succ(static_cast<std::size_t>(size), 0) {
  if (size < 1 || size > 32) throw Error(ErrorKind::InvalidArgument, "frame size must be in 1..32");
}

Frame Frame::from_mask(int n, std::uint64_t mask) {
  Frame F(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((mask >> (i * n + j)) & 1U) F.add(i, j);
  return F;
}

std::uint64_t Frame::mask() const {
  std::uint64_t m = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rel(i, j)) m |= std::uint64_t{1} << (i * n + j);
  return m;
}

Frame Frame::parse(std::string_view literal) {
  auto bad = [&](const std::string& why) {
    return Error(ErrorKind::InvalidArgument, "bad frame literal '" + std::string(literal) + "': " + why);
  };
  const auto semi = literal.find(';');
  if (semi == std::string_view::npos) throw bad("missing ';'");
  auto to_int = [&](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw bad("expected a number");
    return std::stoi(std::string(s));
  };
  const int n = to_int(literal.substr(0, semi));
  if (n < 1 || n > 32) throw bad("size out of range");
  Frame F(n);
  auto rest = literal.substr(semi + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    auto edge = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    if (edge.find_first_not_of(' ') == std::string_view::npos) continue;
    const auto arrow = edge.find("->");
    if (arrow == std::string_view::npos) throw bad("expected i->j");
    const int i = to_int(edge.substr(0, arrow));
    const int j = to_int(edge.substr(arrow + 2));
    if (i >= n || j >= n) throw bad("world out of range");
    F.add(i, j);
  }
  return F;
}

std::string Frame::literal() const {
  std::ostringstream os;
  os << n << ';';
  bool first = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rel(i, j)) {
        os << (first ? "" : ",") << i << "->" << j;
        first = false;
      }
  return os.str();
}

Frame Frame::converse() const {
  Frame F(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rel(i, j)) F.add(j, i);
  return F;
}

WorldSet m_R(const Frame& F, WorldSet X) {
  WorldSet out = 0;
  for (int w = 0; w < F.n; ++w)
    if (F.succ[w] & X) out |= singleton(w);
  return out;
}

WorldSet l_R(const Frame& F, WorldSet X) {
  WorldSet out = 0;
  for (int w = 0; w < F.n; ++w)
    if ((F.succ[w] & ~X) == 0) out |= singleton(w);
  return out;
}

WorldSet image(const Frame& F, WorldSet X, std::size_t k) {
  for (std::size_t step = 0; step < k; ++step) {
    WorldSet next = 0;
    for (int w = 0; w < F.n; ++w)
      if (contains(X, w)) next |= F.succ[w];
    X = next;
  }
  return X;
}

WorldSet extension(const ModalFormula& f, const Frame& F, const Valuation& V) {
  const WorldSet all = F.all();
  switch (f.kind()) {
    case ModalKind::Bottom: return 0;
    case ModalKind::Top: return all;
    case ModalKind::Prop: {
      auto it = V.find(f.name());
      return it == V.end() ? 0 : it->second & all;
    }
    case ModalKind::Not: return all & ~extension(f.arg(), F, V);
    case ModalKind::Box: return l_R(F, extension(f.arg(), F, V));
    case ModalKind::Dia: return m_R(F, extension(f.arg(), F, V));
    case ModalKind::And: return extension(f.lhs(), F, V) & extension(f.rhs(), F, V);
    case ModalKind::Or: return extension(f.lhs(), F, V) | extension(f.rhs(), F, V);
    case ModalKind::Implies: return all & (~extension(f.lhs(), F, V) | extension(f.rhs(), F, V));
    case ModalKind::Iff: return all & ~(extension(f.lhs(), F, V) ^ extension(f.rhs(), F, V));
  }
  return 0;
}

int frame_size_cap() {
  static const int cap = [] {
    if (const char* env = std::getenv("SAHL_MAX_FRAME_N")) {
      const int v = std::atoi(env);
      if (v >= 1 && v <= 8) return v;
    }
    return 4;
  }();
  return cap;
}

// ---------------------------------------------------------------------------

ModalProgram::ModalProgram(const ModalFormula& f) : ModalProgram(f, prop_letters(f)) {}

ModalProgram::ModalProgram(const ModalFormula& f, std::vector<std::string> letters) : letters_(std::move(letters)) {
  compile(f);
}

int ModalProgram::compile(const ModalFormula& f) {
  Op op{f.kind()};
  if (f.is(ModalKind::Prop)) {
    auto it = std::find(letters_.begin(), letters_.end(), f.name());
    if (it == letters_.end()) {
      letters_.push_back(f.name());
      it = letters_.end() - 1;
    }
    op.letter = static_cast<int>(it - letters_.begin());
  } else if (f.is_unary()) {
    op.a = compile(f.arg());
  } else if (f.is_binary()) {
    op.a = compile(f.lhs());
    op.b = compile(f.rhs());
  }
  ops_.push_back(op);
  return static_cast<int>(ops_.size()) - 1;
}

WorldSet ModalProgram::eval(const Frame& F, std::span<const WorldSet> values) const {
  const WorldSet all = F.all();
  std::vector<WorldSet> r(ops_.size());
  for (std::size_t i = 0; i < ops_.size(); ++i) {
    const Op& op = ops_[i];
    switch (op.kind) {
      case ModalKind::Bottom: r[i] = 0; break;
      case ModalKind::Top: r[i] = all; break;
      case ModalKind::Prop:
        r[i] = static_cast<std::size_t>(op.letter) < values.size() ? values[op.letter] & all : 0;
        break;
      case ModalKind::Not: r[i] = all & ~r[op.a]; break;
      case ModalKind::Box: r[i] = l_R(F, r[op.a]); break;
      case ModalKind::Dia: r[i] = m_R(F, r[op.a]); break;
      case ModalKind::And: r[i] = r[op.a] & r[op.b]; break;
      case ModalKind::Or: r[i] = r[op.a] | r[op.b]; break;
      case ModalKind::Implies: r[i] = all & (~r[op.a] | r[op.b]); break;
      case ModalKind::Iff: r[i] = all & ~(r[op.a] ^ r[op.b]); break;
    }
  }
  return r.back();
}

WorldSet ModalProgram::valid_worlds(const Frame& F, int bit_cap) const {
  const std::size_t L = letters_.size();
  const std::size_t bits = L * static_cast<std::size_t>(F.n);
  if (bits > static_cast<std::size_t>(bit_cap))
    throw Error(ErrorKind::ResourceCap, "valuation space 2^" + std::to_string(bits) + " exceeds cap 2^" +
                                            std::to_string(bit_cap));
  WorldSet result = F.all();
  std::vector<WorldSet> values(L);
  const WorldSet lane = F.all();
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << bits) && result; ++v) {
    for (std::size_t i = 0; i < L; ++i) values[i] = static_cast<WorldSet>(v >> (i * F.n)) & lane;
    result &= eval(F, values);
  }
  return result;
}

bool frame_valid_at(const Frame& F, int w, const ModalFormula& f) {
  if (w < 0 || w >= F.n) throw Error(ErrorKind::InvalidArgument, "world out of range");
  return contains(ModalProgram(f).valid_worlds(F), w);
}

bool frame_valid(const Frame& F, const ModalFormula& f) { return ModalProgram(f).valid_worlds(F) == F.all(); }

// ---------------------------------------------------------------------------

FoProgram::FoProgram(const FoFormula& f) {
  const auto fv = free_vars(f);
  free_.assign(fv.begin(), fv.end());
  std::map<std::string, int> scope;
  for (const auto& v : free_) scope[v] = static_cast<int>(slot_count_++);
  root_ = compile(f, scope);
}

int FoProgram::compile(const FoFormula& f, std::map<std::string, int>& scope) {
  Node node{f.kind(), -1, -1, -1, {}};
  switch (f.kind()) {
    case FoKind::Eq:
    case FoKind::Rel:
      node.s0 = scope.at(f.terms()[0]);
      node.s1 = scope.at(f.terms()[1]);
      break;
    case FoKind::Pred: {
      node.s0 = scope.at(f.terms()[0]);
      auto it = std::find(preds_.begin(), preds_.end(), f.symbol());
      if (it == preds_.end()) {
        preds_.push_back(f.symbol());
        it = preds_.end() - 1;
      }
      node.pred = static_cast<int>(it - preds_.begin());
      break;
    }
    case FoKind::Forall:
    case FoKind::Exists: {
      const int slot = static_cast<int>(slot_count_++);
      auto prev = scope.find(f.var());
      std::optional<int> saved;
      if (prev != scope.end()) saved = prev->second;
      scope[f.var()] = slot;
      node.s0 = slot;
      node.kids.push_back(compile(f.body(), scope));
      if (saved) scope[f.var()] = *saved;
      else scope.erase(f.var());
      break;
    }
    default:
      for (const auto& c : f.children()) node.kids.push_back(compile(c, scope));
      break;
  }
  nodes_.push_back(std::move(node));
  return static_cast<int>(nodes_.size()) - 1;
}

int FoProgram::slot_of(const std::string& var) const {
  auto it = std::find(free_.begin(), free_.end(), var);
  return it == free_.end() ? -1 : static_cast<int>(it - free_.begin());
}

bool FoProgram::run(int idx, const Frame& F, std::vector<int>& env, std::span<const WorldSet> preds) const {
  const Node& n = nodes_[idx];
  switch (n.kind) {
    case FoKind::True: return true;
    case FoKind::False: return false;
    case FoKind::Eq: return env[n.s0] == env[n.s1];
    case FoKind::Rel: return F.rel(env[n.s0], env[n.s1]);
    case FoKind::Pred:
      return static_cast<std::size_t>(n.pred) < preds.size() && contains(preds[n.pred], env[n.s0]);
    case FoKind::Not: return !run(n.kids[0], F, env, preds);
    case FoKind::And:
      for (int k : n.kids)
        if (!run(k, F, env, preds)) return false;
      return true;
    case FoKind::Or:
      for (int k : n.kids)
        if (run(k, F, env, preds)) return true;
      return false;
    case FoKind::Implies: return !run(n.kids[0], F, env, preds) || run(n.kids[1], F, env, preds);
    case FoKind::Iff: return run(n.kids[0], F, env, preds) == run(n.kids[1], F, env, preds);
    case FoKind::Forall:
      for (int w = 0; w < F.n; ++w) {
        env[n.s0] = w;
        if (!run(n.kids[0], F, env, preds)) return false;
      }
      return true;
    case FoKind::Exists:
      for (int w = 0; w < F.n; ++w) {
        env[n.s0] = w;
        if (run(n.kids[0], F, env, preds)) return true;
      }
      return false;
  }
  return false;
}

bool FoProgram::eval(const Frame& F, std::vector<int>& env, std::span<const WorldSet> preds) const {
  env.resize(std::max(env.size(), slot_count_));
  return run(root_, F, env, preds);
}

bool FoProgram::eval_at(const Frame& F, int w, std::span<const WorldSet> preds) const {
  if (free_.size() > 1) throw Error(ErrorKind::UnboundVariable, "more than one free variable: " + free_[1]);
  std::vector<int> env(slot_count_, 0);
  if (!free_.empty()) env[0] = w;
  return run(root_, F, env, preds);
}

bool eval_fo(const Frame& F, const Assignment& a, const FoFormula& f, const Interpretation& I) {
  FoProgram prog(f);
  std::vector<int> env(prog.slot_count(), 0);
  for (std::size_t i = 0; i < prog.free_slots().size(); ++i) {
    auto it = a.find(prog.free_slots()[i]);
    if (it == a.end()) throw Error(ErrorKind::UnboundVariable, "unbound variable " + prog.free_slots()[i]);
    if (it->second < 0 || it->second >= F.n) throw Error(ErrorKind::InvalidArgument, "world out of range");
    env[i] = it->second;
  }
  std::vector<WorldSet> preds;
  for (const auto& p : prog.predicates()) {
    auto it = I.find(p);
    preds.push_back(it == I.end() ? 0 : it->second);
  }
  return prog.eval(F, env, preds);
}

bool eval_so(const Frame& F, const Assignment& a, const SoFormula& f) {
  FoProgram prog(f.matrix);
  std::vector<int> env(prog.slot_count(), 0);
  for (std::size_t i = 0; i < prog.free_slots().size(); ++i) {
    auto it = a.find(prog.free_slots()[i]);
    if (it == a.end()) throw Error(ErrorKind::UnboundVariable, "unbound variable " + prog.free_slots()[i]);
    env[i] = it->second;
  }
  // Symbols of the matrix that are quantified get enumerated; others are empty.
  std::vector<int> quantified;
  for (std::size_t i = 0; i < prog.predicates().size(); ++i)
    if (std::find(f.prefix.begin(), f.prefix.end(), prog.predicates()[i]) != f.prefix.end())
      quantified.push_back(static_cast<int>(i));
  const std::size_t bits = quantified.size() * static_cast<std::size_t>(F.n);
  if (bits > static_cast<std::size_t>(valuation_bit_cap))
    throw Error(ErrorKind::ResourceCap, "predicate interpretation space too large");
  std::vector<WorldSet> preds(prog.predicates().size(), 0);
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << bits); ++v) {
    for (std::size_t i = 0; i < quantified.size(); ++i)
      preds[quantified[i]] = static_cast<WorldSet>(v >> (i * F.n)) & F.all();
    if (!prog.eval(F, env, preds)) return false;
  }
  return true;
}

FrameRange enumerate_frames(int n, int cap) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "frame size must be positive");
  if (n > cap || n > 8)
    throw Error(ErrorKind::ResourceCap, "frame size " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  return FrameRange(n, n * n >= 64 ? ~std::uint64_t{0} : std::uint64_t{1} << (n * n));
}

std::vector<Frame> sample_frames(int n, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int bits = n * n;
  const std::uint64_t keep = bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
  std::vector<Frame> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(Frame::from_mask(n, rng() & keep));
  return out;
}

std::string describe(const Counterexample& c) {
  std::ostringstream os;
  os << "frame " << c.frame.literal() << " world " << c.world << ": "
     << (c.direction == Direction::ModalOnly ? "formula valid, correspondent false"
                                             : "correspondent true, formula refuted");
  return os.str();
}

Verdict check_local_correspondence(const ModalFormula& f, const FoFormula& alpha, int max_n, std::size_t sample4,
                                   std::uint64_t seed) {
  const auto fv = free_vars(alpha);
  for (const auto& v : fv)
    if (v != "x") throw Error(ErrorKind::UnboundVariable, "correspondent has free variable " + v);
  if (max_n > frame_size_cap())
    throw Error(ErrorKind::ResourceCap,
                "frame size " + std::to_string(max_n) + " exceeds cap " + std::to_string(frame_size_cap()));

  const ModalProgram modal(f);
  const FoProgram fo(alpha);
  const int top_n = std::max(max_n, sample4 ? 4 : 0);
  if (modal.letters().size() * static_cast<std::size_t>(top_n) > valuation_bit_cap)
    throw Error(ErrorKind::ResourceCap, "valuation space too large");

  // Jobs in canonical order: all frames of size 1..max_n by mask, then the samples.
  std::vector<std::pair<int, std::uint64_t>> blocks;  // (n, count) prefix layout
  std::uint64_t total = 0;
  for (int n = 1; n <= max_n; ++n) {
    const auto cnt = enumerate_frames(n).size();
    blocks.emplace_back(n, cnt);
    total += cnt;
  }
  const auto samples = sample_frames(4, sample4, seed);
  const std::uint64_t exhaustive = total;
  total += samples.size();

  auto frame_at = [&](std::uint64_t idx) {
    if (idx >= exhaustive) return samples[idx - exhaustive];
    for (const auto& [n, cnt] : blocks) {
      if (idx < cnt) return Frame::from_mask(n, idx);
      idx -= cnt;
    }
    return Frame(1);
  };

  constexpr std::uint64_t chunk = 64;
  std::atomic<std::uint64_t> cursor{0};
  std::atomic<std::uint64_t> best{~std::uint64_t{0}};
  std::mutex mu;
  std::optional<Counterexample> found;

  auto worker = [&] {
    for (;;) {
      const std::uint64_t start = cursor.fetch_add(chunk);
      if (start >= total || start > best.load()) return;
      const std::uint64_t stop = std::min(total, start + chunk);
      for (std::uint64_t i = start; i < stop; ++i) {
        if (i > best.load()) return;
        const Frame F = frame_at(i);
        const WorldSet valid = modal.valid_worlds(F);
        for (int w = 0; w < F.n; ++w) {
          const bool m = contains(valid, w);
          const bool a = fo.eval_at(F, w);
          if (m == a) continue;
          std::lock_guard lock(mu);
          if (i < best.load()) {
            best = i;
            found = Counterexample{F, w, m ? Direction::ModalOnly : Direction::FoOnly};
          }
          break;
        }
      }
    }
  };

  const unsigned hw = std::max(1U, std::thread::hardware_concurrency());
  const unsigned threads = static_cast<unsigned>(std::min<std::uint64_t>(hw, (total + chunk - 1) / chunk));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  Verdict v;
  v.frames_checked = found ? best.load() + 1 : total;
  if (found) {
    v.pass = false;
    v.counterexample = std::move(found);
  }
  return v;
}

}  // namespace sahl
