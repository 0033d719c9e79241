#include "tcms/porter_stemmer.hpp"

#include <array>
#include <cstddef>

namespace tcms {
namespace {

// One stemming pass over a single word. Mirrors the classic reference
// structure: predicates operate on a prefix ("stem") of the working buffer,
// suffix rules fire longest-match-first and a failed condition still ends
// the step.
class PorterRun {
public:
    explicit PorterRun(std::string_view word) : w_(word) {}

    std::string run() {
        if (w_.size() <= 2) return std::move(w_);
        step1a();
        step1b();
        step1c();
        step2();
        step3();
        step4();
        step5();
        return std::move(w_);
    }

private:
    std::string w_;
    std::size_t stem_ = 0; // prefix length left by the last ends() match

    // y counts as a vowel only when preceded by a consonant.
    bool cons(std::size_t i) const {
        switch (w_[i]) {
        case 'a': case 'e': case 'i': case 'o': case 'u':
            return false;
        case 'y':
            return i == 0 ? true : !cons(i - 1);
        default:
            return true;
        }
    }

    // Measure m of the prefix [0, len): the number of VC sequences in the
    // form [C](VC)^m[V].
    std::size_t measure(std::size_t len) const {
        std::size_t n = 0, i = 0;
        while (i < len && cons(i)) ++i;
        while (i < len) {
            while (i < len && !cons(i)) ++i;
            if (i == len) break;
            ++n;
            while (i < len && cons(i)) ++i;
        }
        return n;
    }

    bool vowel_in_stem(std::size_t len) const {
        for (std::size_t i = 0; i < len; ++i)
            if (!cons(i)) return true;
        return false;
    }

    bool double_consonant(std::size_t len) const {
        return len >= 2 && w_[len - 1] == w_[len - 2] && cons(len - 1);
    }

    // *o: stem ends consonant-vowel-consonant where the final consonant is
    // not w, x or y.
    bool cvc(std::size_t len) const {
        if (len < 3 || !cons(len - 3) || cons(len - 2) || !cons(len - 1))
            return false;
        char c = w_[len - 1];
        return c != 'w' && c != 'x' && c != 'y';
    }

    bool ends(std::string_view suffix) {
        if (suffix.size() > w_.size()) return false;
        if (w_.compare(w_.size() - suffix.size(), suffix.size(), suffix) != 0)
            return false;
        stem_ = w_.size() - suffix.size();
        return true;
    }

    void set_suffix(std::string_view repl) {
        w_.resize(stem_);
        w_.append(repl);
    }

    void step1a() {
        if (ends("sses")) set_suffix("ss");
        else if (ends("ies")) set_suffix("i");
        else if (ends("ss")) {}
        else if (ends("s")) set_suffix("");
    }

    void step1b() {
        if (ends("eed")) {
            if (measure(stem_) > 0) set_suffix("ee");
            return;
        }
        bool stripped = false;
        if (ends("ed") && vowel_in_stem(stem_)) {
            set_suffix("");
            stripped = true;
        } else if (ends("ing") && vowel_in_stem(stem_)) {
            set_suffix("");
            stripped = true;
        }
        if (!stripped) return;

        if (ends("at")) set_suffix("ate");
        else if (ends("bl")) set_suffix("ble");
        else if (ends("iz")) set_suffix("ize");
        else if (double_consonant(w_.size())) {
            char last = w_.back();
            if (last != 'l' && last != 's' && last != 'z') w_.pop_back();
        } else if (measure(w_.size()) == 1 && cvc(w_.size())) {
            w_.push_back('e');
        }
    }

    void step1c() {
        if (ends("y") && vowel_in_stem(stem_)) w_.back() = 'i';
    }

    struct Rule {
        std::string_view suffix;
        std::string_view repl;
    };

    // First matching suffix claims the rule; replace only if m(stem) > min_m.
    void apply_rules(const Rule* rules, std::size_t count, std::size_t min_m) {
        for (std::size_t i = 0; i < count; ++i) {
            if (ends(rules[i].suffix)) {
                if (measure(stem_) > min_m) set_suffix(rules[i].repl);
                return;
            }
        }
    }

    void step2() {
        static constexpr std::array<Rule, 21> rules = {{
            {"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"},
            {"anci", "ance"},   {"izer", "ize"},    {"bli", "ble"},
            {"alli", "al"},     {"entli", "ent"},   {"eli", "e"},
            {"ousli", "ous"},   {"ization", "ize"}, {"ation", "ate"},
            {"ator", "ate"},    {"alism", "al"},    {"iveness", "ive"},
            {"fulness", "ful"}, {"ousness", "ous"}, {"aliti", "al"},
            {"iviti", "ive"},   {"biliti", "ble"},  {"logi", "log"},
        }};
        apply_rules(rules.data(), rules.size(), 0);
    }

    void step3() {
        static constexpr std::array<Rule, 7> rules = {{
            {"icate", "ic"}, {"ative", ""}, {"alize", "al"}, {"iciti", "ic"},
            {"ical", "ic"},  {"ful", ""},   {"ness", ""},
        }};
        apply_rules(rules.data(), rules.size(), 0);
    }

    void step4() {
        // "ion" overlaps no other suffix here and only strips when the
        // remaining stem ends in s or t.
        if (ends("ion")) {
            if (measure(stem_) > 1 && stem_ > 0 &&
                (w_[stem_ - 1] == 's' || w_[stem_ - 1] == 't'))
                set_suffix("");
            return;
        }
        static constexpr std::array<Rule, 18> rules = {{
            {"al", ""},    {"ance", ""}, {"ence", ""}, {"er", ""},
            {"ic", ""},    {"able", ""}, {"ible", ""}, {"ant", ""},
            {"ement", ""}, {"ment", ""}, {"ent", ""},  {"ou", ""},
            {"ism", ""},   {"ate", ""},  {"iti", ""},  {"ous", ""},
            {"ive", ""},   {"ize", ""},
        }};
        apply_rules(rules.data(), rules.size(), 1);
    }

    void step5() {
        if (ends("e")) {
            std::size_t m = measure(stem_);
            if (m > 1 || (m == 1 && !cvc(stem_))) set_suffix("");
        }
        if (measure(w_.size()) > 1 && double_consonant(w_.size()) &&
            w_.back() == 'l')
            w_.pop_back();
    }
};

} // namespace

std::string porter_stem(std::string_view word) {
    return PorterRun(word).run();
}

} // namespace tcms
