#include "bandix/braid.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace bandix {

BraidWord::BraidWord(int strands_, std::vector<int> letters_)
    : strands(strands_), letters(std::move(letters_)) {
    if (strands < 1)
        throw RangeError("strand count must be positive, got " + std::to_string(strands));
    for (int e : letters) {
        if (e == 0) throw RangeError("0 is not a braid generator");
        if (std::abs(e) > strands - 1)
            throw RangeError("letter " + std::to_string(e) + " out of range for " +
                             std::to_string(strands) + " strands");
    }
}

namespace {

std::vector<int> tokenize_ints(std::string_view text) {
    std::vector<int> out;
    size_t i = 0;
    auto is_sep = [](char ch) {
        return ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r' || ch == ',';
    };
    while (i < text.size()) {
        if (is_sep(text[i])) {
            ++i;
            continue;
        }
        size_t j = i;
        while (j < text.size() && !is_sep(text[j])) ++j;
        std::string_view tok = text.substr(i, j - i);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            throw SyntaxError("not an integer: '" + std::string(tok) + "'");
        out.push_back(value);
        i = j;
    }
    return out;
}

}  // namespace

BraidWord parse_braid(std::string_view text, std::optional<int> strands_override) {
    std::vector<int> letters = tokenize_ints(text);
    for (int e : letters)
        if (e == 0) throw SyntaxError("0 is not a braid generator");
    int strands = 1;
    if (strands_override) {
        strands = *strands_override;
        if (strands < 1) throw RangeError("strand count must be positive");
    } else {
        for (int e : letters) strands = std::max(strands, std::abs(e) + 1);
    }
    return BraidWord(strands, std::move(letters));
}

int Permutation::cycle_count() const {
    std::vector<char> seen(images.size(), 0);
    int cycles = 0;
    for (size_t i = 0; i < images.size(); ++i) {
        if (seen[i]) continue;
        ++cycles;
        size_t j = i;
        while (!seen[j]) {
            seen[j] = 1;
            j = static_cast<size_t>(images[j]);
        }
    }
    return cycles;
}

int Permutation::parity_sign() const {
    return ((size() - cycle_count()) % 2 == 0) ? 1 : -1;
}

Permutation closure_permutation(const BraidWord& w) {
    // where[p] = strand currently occupying position p.
    std::vector<int> where(w.strands);
    std::iota(where.begin(), where.end(), 0);
    for (int e : w.letters) {
        int i = std::abs(e) - 1;
        std::swap(where[i], where[i + 1]);
    }
    Permutation p;
    p.images.resize(w.strands);
    for (int pos = 0; pos < w.strands; ++pos) p.images[where[pos]] = pos;
    return p;
}

int closure_components(const BraidWord& w) {
    return closure_permutation(w).cycle_count();
}

int exponent_sum(const BraidWord& w) {
    int sum = 0;
    for (int e : w.letters) sum += (e > 0) ? 1 : -1;
    return sum;
}

BraidWord free_reduce(const BraidWord& w) {
    std::vector<int> stack;
    for (int e : w.letters) {
        if (!stack.empty() && stack.back() == -e)
            stack.pop_back();
        else
            stack.push_back(e);
    }
    return BraidWord(w.strands, std::move(stack));
}

std::string braid_to_string(const BraidWord& w) {
    std::ostringstream os;
    for (size_t i = 0; i < w.letters.size(); ++i) {
        if (i) os << ' ';
        os << w.letters[i];
    }
    return os.str();
}

}  // namespace bandix
