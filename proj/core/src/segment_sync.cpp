#include "dlga/segment_sync.hpp"

#include <deque>
#include <map>
#include <optional>

#include "dlga/errors.hpp"
#include "dlga/fsa.hpp"

namespace dlga {

namespace {

struct SyncState {
  std::uint32_t seg = 0;
  State inner = 0;
  bool top_fin = false;
  bool bottom_fin = false;
  std::deque<Symbol> top_q;
  std::deque<Symbol> bottom_q;

  std::vector<std::uint32_t> key() const {
    std::vector<std::uint32_t> k{seg, inner, static_cast<std::uint32_t>(top_fin) | (bottom_fin ? 2u : 0u),
                                 static_cast<std::uint32_t>(top_q.size())};
    k.insert(k.end(), top_q.begin(), top_q.end());
    k.insert(k.end(), bottom_q.begin(), bottom_q.end());
    return k;
  }
};

enum class Status { Content, Term, Wait, Bad };

class Synchronizer {
 public:
  Synchronizer(const AlphabetPtr& conv, const SyncScheme& scheme, const std::vector<Automaton>& machines)
      : conv_(conv), scheme_(scheme), machines_(machines) {}

  // Drains both queues as far as the segment rules allow; false means reject.
  bool settle(SyncState& st) const {
    const auto count = static_cast<std::uint32_t>(scheme_.segments.size());
    for (;;) {
      if (st.seg == count) return st.top_q.empty() && st.bottom_q.empty();
      const auto& spec = scheme_.segments[st.seg];
      const Status ts = classify(st.top_q, st.top_fin, spec);
      const Status bs = classify(st.bottom_q, st.bottom_fin, spec);
      if (ts == Status::Bad || bs == Status::Bad) return false;
      const Symbol pad = conv_->pad();
      if (ts == Status::Content && bs == Status::Content) {
        if (!feed(st, conv_->pair(st.top_q.front(), st.bottom_q.front()))) return false;
        st.top_q.pop_front();
        st.bottom_q.pop_front();
      } else if (ts == Status::Term && bs == Status::Content) {
        if (!feed(st, conv_->pair(pad, st.bottom_q.front()))) return false;
        st.bottom_q.pop_front();
      } else if (ts == Status::Content && bs == Status::Term) {
        if (!feed(st, conv_->pair(st.top_q.front(), pad))) return false;
        st.top_q.pop_front();
      } else if (ts == Status::Term && bs == Status::Term) {
        if (!machines_[st.seg].is_accepting(st.inner)) return false;
        if (spec.end == SegmentEnd::Hash) {
          st.top_q.pop_front();
          st.bottom_q.pop_front();
        }
        ++st.seg;
        st.inner = st.seg < count ? machines_[st.seg].start() : 0;
      } else {
        return true;
      }
    }
  }

 private:
  Status classify(const std::deque<Symbol>& q, bool fin, const SegmentSpec& spec) const {
    if (q.empty()) {
      if (!fin) return Status::Wait;
      return spec.end == SegmentEnd::Hash ? Status::Bad : Status::Term;
    }
    const Symbol a = q.front();
    if (spec.content[a]) return Status::Content;
    if (spec.end == SegmentEnd::Hash && a == scheme_.separator) return Status::Term;
    if (spec.end == SegmentEnd::Soft) return Status::Term;
    return Status::Bad;
  }

  bool feed(SyncState& st, Symbol sym) const {
    State next = machines_[st.seg].step(st.inner, sym);
    if (next == kNoState) return false;
    st.inner = next;
    return true;
  }

  const AlphabetPtr& conv_;
  const SyncScheme& scheme_;
  const std::vector<Automaton>& machines_;
};

}  // namespace

Automaton synchronize_segments(const AlphabetPtr& conv, const SyncScheme& scheme,
                               const std::vector<Automaton>& input_machines, std::size_t max_lag,
                               std::size_t cap) {
  if (scheme.segments.size() != input_machines.size() || scheme.segments.empty()) {
    throw std::invalid_argument("synchronize_segments: one machine per segment required");
  }
  std::vector<Automaton> machines;
  for (const auto& m : input_machines) {
    if (!same_alphabet(m.alphabet(), conv)) throw AlphabetMismatch("segment machine alphabet differs");
    machines.push_back(m.deterministic() ? m : determinize(m, cap));
  }
  Synchronizer sync(conv, scheme, machines);
  const Symbol pad = conv->pad();

  Automaton out(conv);
  std::map<std::vector<std::uint32_t>, State> ids;
  std::vector<SyncState> pending;
  auto intern = [&](SyncState st) {
    auto [it, fresh] = ids.emplace(st.key(), 0);
    if (fresh) {
      SyncState fin = st;
      fin.top_fin = fin.bottom_fin = true;
      const bool acc = sync.settle(fin) && fin.seg == scheme.segments.size();
      it->second = out.add_state(acc);
      if (out.num_states() > cap) throw StateBlowup("segment synchronizer exceeded state cap");
      pending.push_back(std::move(st));
    }
    return it->second;
  };

  SyncState init;
  init.inner = machines[0].start();
  out.set_start(intern(init));
  while (!pending.empty()) {
    SyncState st = std::move(pending.back());
    pending.pop_back();
    const State from = ids.at(st.key());
    for (Symbol sym = 0; sym < conv->size(); ++sym) {
      const Symbol t = conv->top(sym), b = conv->bottom(sym);
      if ((st.top_fin && t != pad) || (st.bottom_fin && b != pad)) continue;
      SyncState next = st;
      if (t == pad) {
        next.top_fin = true;
      } else {
        next.top_q.push_back(t);
      }
      if (b == pad) {
        next.bottom_fin = true;
      } else {
        next.bottom_q.push_back(b);
      }
      if (!sync.settle(next)) continue;
      if (next.top_q.size() > max_lag || next.bottom_q.size() > max_lag) continue;
      out.add_edge(from, sym, intern(std::move(next)));
    }
  }
  return out;
}

}  // namespace dlga
