#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "plcpk/extend.hpp"
#include "plcpk/gram_set.hpp"

namespace plcpk {

struct EditOp {
    enum Kind : std::uint8_t { Sub, Ins, Del };
    std::uint32_t offset; // position in the edited gram z
    Kind kind;
    code_t letter; // for Sub/Ins
};

namespace detail {

/// Drives the per-position error enumeration: generates edited grams z
/// following the one-error-past-the-current-match window rule, queries the
/// gram set (exact, then strict predecessor/successor), and reports scored
/// witness candidates. Scoring is always the exact per-pair extension
/// (kangaroo under Hamming, Landau-Vishkin under edit), clipped to the
/// per-position region ends, so every reported value is attained by a real
/// witness pair.
class SearchEngine {
public:
    struct Hooks {
        // witness positions to reject (the query position itself, S_{i,k}, ...)
        std::function<bool(std::size_t)> excluded;
        // replacement witness f_j for a rejected j; return -1 for none
        std::function<std::int64_t(std::size_t)> f_replacement;
        // receives every scored candidate
        std::function<void(std::size_t witness, std::size_t score)> candidate;
        // replaces the default extension-based scoring when set
        std::function<std::size_t(std::size_t i, std::size_t witness)> scorer;
        // observer for every generated error sequence (duplicate audits)
        std::function<void(std::size_t i, std::span<const EditOp>)> audit;
        // upper bound on |excluded| among set members; bounds the walks
        std::size_t max_excluded = 1;
        // when set, score every entry whose key agrees with z on at least
        // this many letters (full-suffix overlap queries) instead of only
        // the nearest admissible neighbors
        std::optional<std::size_t> agreement_threshold;
    };

    SearchEngine(const Text& text, const SuffixIndex& idx, const GramSet& set, Model model,
                 int k, unsigned max_letter, const std::vector<std::size_t>& pos_end)
        : text_(text), idx_(idx), set_(set), model_(model), k_(k), max_letter_(max_letter),
          pos_end_(pos_end) {}

    void process(std::size_t i, const Hooks& hooks) {
        if (pos_end_[i] <= i) return;
        i_ = i;
        hooks_ = &hooks;
        const GramCodec& codec = set_.codec();
        ops_.clear();
        if (model_ == Model::Hamming) {
            z_ = codec.pack(text_, i);
            std::size_t m0 = evaluate();
            recurse_hamming(-1, m0);
        } else {
            materialize_edit();
            std::size_t m0 = evaluate();
            recurse_edit(-1, false, m0);
        }
        hooks_ = nullptr;
    }

private:
    std::size_t score(std::size_t t) const {
        if (model_ == Model::Hamming)
            return hamming_extend(idx_, i_, t, k_, pos_end_[i_], pos_end_[t]);
        return lv_extend(idx_, i_, t, k_, pos_end_[i_], pos_end_[t]);
    }

    void emit(std::size_t t) const {
        hooks_->candidate(t, hooks_->scorer ? hooks_->scorer(i_, t) : score(t));
    }

    /// Emit the candidate for witness t, routing rejected positions through
    /// the replacement table when one is configured.
    bool emit_checked(std::size_t t) const {
        if (hooks_->excluded && hooks_->excluded(t)) {
            if (hooks_->f_replacement) {
                std::int64_t ft = hooks_->f_replacement(t);
                if (ft >= 0) emit(static_cast<std::size_t>(ft));
            }
            return false;
        }
        emit(t);
        return true;
    }

    void heavy_hit(std::size_t e) const {
        for (std::size_t m = 0, cnt = set_.member_count(e); m < cnt; ++m)
            emit_checked(set_.member_position(e, m));
    }

    /// Nearest admissible entry in one direction: steps past entries whose
    /// members are all rejected (each rejected member may contribute its
    /// replacement witness instead).
    void walk_nearest(std::optional<std::size_t> start, std::int64_t dir) const {
        const std::size_t member_cap = hooks_->max_excluded + 1;
        std::size_t steps = hooks_->max_excluded + 2;
        std::optional<std::size_t> e = start;
        while (e && steps-- > 0) {
            if (emit_checked(set_.first_member(*e))) return;
            std::size_t cnt = std::min(set_.member_count(*e), member_cap);
            for (std::size_t m = 1; m < cnt; ++m)
                if (emit_checked(set_.member_position(*e, m))) return;
            std::int64_t nxt = static_cast<std::int64_t>(*e) + dir;
            if (nxt < 0 || nxt >= static_cast<std::int64_t>(set_.size())) return;
            e = static_cast<std::size_t>(nxt);
        }
    }

    /// Every entry agreeing with z on at least tau letters, one direction.
    void walk_threshold(std::optional<std::size_t> start, std::int64_t dir,
                        std::size_t tau) const {
        std::optional<std::size_t> e = start;
        while (e) {
            if (set_.codec().xor_lcp(z_, set_.entry(*e).key) < tau) return;
            for (std::size_t m = 0, cnt = set_.member_count(*e); m < cnt; ++m)
                emit_checked(set_.member_position(*e, m));
            std::int64_t nxt = static_cast<std::int64_t>(*e) + dir;
            if (nxt < 0 || nxt >= static_cast<std::int64_t>(set_.size())) return;
            e = static_cast<std::size_t>(nxt);
        }
    }

    /// Query the set for the current z; emits candidates and returns the
    /// window bound m = best agreement of z with any key other than itself.
    std::size_t evaluate() {
        const GramCodec& codec = set_.codec();
        if (hooks_->audit) hooks_->audit(i_, std::span<const EditOp>(ops_));

        GramSet::Locate loc = set_.locate(z_);
        if (loc.exact) heavy_hit(*loc.exact);
        auto pred = loc.pred;
        auto succ = loc.succ;
        std::size_t m = 0;
        if (pred) m = std::max(m, set_.agreement(z_, *pred));
        if (succ) m = std::max(m, set_.agreement(z_, *succ));

        if (hooks_->agreement_threshold) {
            std::size_t tau = *hooks_->agreement_threshold;
            if (tau <= codec.lambda()) {
                walk_threshold(pred, -1, tau);
                walk_threshold(succ, +1, tau);
            }
        } else {
            walk_nearest(pred, -1);
            walk_nearest(succ, +1);
        }
        return m;
    }

    void recurse_hamming(std::int64_t last_off, std::size_t m) {
        if (static_cast<int>(ops_.size()) == k_) return;
        const GramCodec& codec = set_.codec();
        std::int64_t hi = std::min<std::int64_t>(static_cast<std::int64_t>(m),
                                                 region_limit() - 1);
        for (std::int64_t o = last_off + 1; o <= hi; ++o) {
            code_t orig = codec.digit(z_, static_cast<std::size_t>(o));
            for (code_t a = 1; a <= max_letter_; ++a) {
                if (a == orig) continue;
                set_digit(static_cast<std::size_t>(o), a);
                ops_.push_back({static_cast<std::uint32_t>(o), EditOp::Sub, a});
                std::size_t m2 = evaluate();
                recurse_hamming(o, m2);
                ops_.pop_back();
            }
            set_digit(static_cast<std::size_t>(o), orig);
        }
    }

    void recurse_edit(std::int64_t last_off, bool last_was_del, std::size_t m) {
        if (static_cast<int>(ops_.size()) == k_) return;
        const std::size_t lambda = set_.codec().lambda();
        std::int64_t lo = last_was_del ? last_off : last_off + 1;
        std::int64_t hi = std::min<std::int64_t>(static_cast<std::int64_t>(m),
                                                 static_cast<std::int64_t>(lambda) - 1);
        for (std::int64_t o = std::max<std::int64_t>(lo, 0); o <= hi; ++o) {
            std::size_t off = static_cast<std::size_t>(o);
            // past the region only insertions remain meaningful (they consume
            // no source letter; delete-then-append alignments need them)
            bool exhausted = src_before_[off] >= pos_end_[i_];
            code_t source_letter = z_digits_[off];

            if (!exhausted)
                for (code_t a = 1; a <= max_letter_; ++a) { // substitutions
                    if (a == source_letter) continue;
                    apply_and_recurse({static_cast<std::uint32_t>(off), EditOp::Sub, a}, false);
                }
            bool ins_blocked = last_was_del && o == last_off; // del+ins = costlier sub
            if (!ins_blocked)
                for (code_t a = 1; a <= max_letter_; ++a)
                    apply_and_recurse({static_cast<std::uint32_t>(off), EditOp::Ins, a}, false);
            if (!exhausted)
                apply_and_recurse({static_cast<std::uint32_t>(off), EditOp::Del, 0}, true);
        }
    }

    void apply_and_recurse(EditOp op, bool is_del) {
        ops_.push_back(op);
        materialize_edit();
        std::size_t m2 = evaluate();
        recurse_edit(static_cast<std::int64_t>(op.offset), is_del, m2);
        ops_.pop_back();
        materialize_edit();
    }

    /// Rebuild the edited gram from the op list: z is the first lambda
    /// letters of x[i..] after the edits, sentinel-padded past the end of
    /// the text. src_before_[o] is the next source position consumed at
    /// offset o (deletions at o already applied).
    void materialize_edit() {
        const GramCodec& codec = set_.codec();
        const std::size_t lambda = codec.lambda();
        const std::size_t n = text_.size();
        z_digits_.assign(lambda, 0);
        src_before_.assign(lambda, 0);
        std::size_t src = i_, oi = 0, len = lambda;
        for (std::size_t o = 0; o < lambda; ++o) {
            while (oi < ops_.size() && ops_[oi].offset == o && ops_[oi].kind == EditOp::Del) {
                ++src;
                ++oi;
            }
            src_before_[o] = src;
            code_t d;
            if (oi < ops_.size() && ops_[oi].offset == o && ops_[oi].kind == EditOp::Sub) {
                d = ops_[oi].letter;
                ++src;
                ++oi;
            } else if (oi < ops_.size() && ops_[oi].offset == o && ops_[oi].kind == EditOp::Ins) {
                d = ops_[oi].letter;
                ++oi;
            } else {
                d = src < n ? text_.codes[src] : code_t{0};
                ++src;
            }
            z_digits_[o] = d;
            if (d == 0 && len == lambda) len = o;
        }
        z_ = codec.pack_digits(std::span<const code_t>(z_digits_), len);
    }

    std::int64_t region_limit() const {
        return static_cast<std::int64_t>(
            std::min(set_.codec().lambda(), pos_end_[i_] - i_));
    }

    void set_digit(std::size_t o, code_t d) {
        // patch one digit of the packed gram in place
        const GramCodec& codec = set_.codec();
        unsigned b = codec.bits_per_letter();
        std::size_t dpw = 64 / b;
        std::size_t w = o / dpw, slot = o % dpw;
        unsigned shift = static_cast<unsigned>((dpw - 1 - slot) * b);
        std::uint64_t mask = (std::uint64_t{(1u << b) - 1}) << shift;
        z_.words[w] = (z_.words[w] & ~mask) | (static_cast<std::uint64_t>(d) << shift);
    }

    const Text& text_;
    const SuffixIndex& idx_;
    const GramSet& set_;
    Model model_;
    int k_;
    unsigned max_letter_;
    const std::vector<std::size_t>& pos_end_;

    std::size_t i_ = 0;
    const Hooks* hooks_ = nullptr;
    PackedGram z_;
    std::vector<EditOp> ops_;
    std::vector<code_t> z_digits_;
    std::vector<std::size_t> src_before_;
};

} // namespace detail
} // namespace plcpk
