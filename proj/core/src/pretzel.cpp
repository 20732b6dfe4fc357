#include "bandix/pretzel.hpp"

#include <charconv>
#include <cstdlib>
#include <numeric>

namespace bandix {

PretzelSpec::PretzelSpec(std::vector<int> params_) : params(std::move(params_)) {
    for (int p : params)
        if (p == 0) throw ZeroParam("pretzel parameters must be nonzero");
    if (params.size() < 2)
        throw InvalidInput("a pretzel needs at least two parameters");
}

PretzelSpec parse_pretzel(std::string_view text) {
    std::vector<int> params;
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
        params.push_back(value);
        i = j;
    }
    if (params.size() < 2)
        throw SyntaxError("a pretzel needs at least two parameters");
    return PretzelSpec(std::move(params));
}

CorollaryInput::CorollaryInput(int p1_, std::vector<int> odds_)
    : p1(p1_), odds(std::move(odds_)) {
    if (p1 % 2 != 0 || std::abs(p1) < 2)
        throw InvalidInput("the first parameter must be even with magnitude at least 2");
    if (odds.empty())
        throw InvalidInput("the formula needs at least one odd parameter");
    for (int o : odds)
        if (o % 2 == 0 || std::abs(o) < 3)
            throw InvalidInput("odd parameters must have magnitude at least 3, got " +
                               std::to_string(o));
}

int CorollaryInput::alpha() const {
    int a = 0;
    for (int o : odds) a += (o > 0) ? 1 : -1;
    return a;
}

int CorollaryInput::b() const { return p1 > 0 ? 1 : -1; }

int CorollaryInput::delta() const {
    int d = 0;
    for (int o : odds) d += std::abs(o) - 1;
    return d;
}

CorollaryResult corollary_band_index(const CorollaryInput& in) {
    const int n = in.n();
    const int alpha = in.alpha();
    const int delta = in.delta();
    if (n % 2 != 0) {
        if (alpha != 0) return {delta + 2, "delta+2"};
        throw UncoveredCase("n odd with alpha = 0 is not covered by the band index formula");
    }
    if (alpha == 0) return {delta, "delta"};
    if (alpha + in.b() != 0) return {std::abs(in.p1) + delta, "|p1|+delta"};
    return {std::abs(in.p1) + delta - 2, "|p1|+delta-2"};
}

bool all_even(const PretzelSpec& spec) {
    for (int p : spec.params)
        if (p % 2 != 0) return false;
    return true;
}

std::optional<CorollaryInput> as_corollary_input(const PretzelSpec& spec) {
    int even_index = -1;
    int even_count = 0;
    for (size_t i = 0; i < spec.params.size(); ++i) {
        if (spec.params[i] % 2 == 0) {
            even_index = static_cast<int>(i);
            ++even_count;
        }
    }
    if (even_count != 1) return std::nullopt;
    std::vector<int> odds;
    odds.reserve(spec.params.size() - 1);
    for (size_t k = 1; k < spec.params.size(); ++k)
        odds.push_back(spec.params[(static_cast<size_t>(even_index) + k) % spec.params.size()]);
    return CorollaryInput(spec.params[static_cast<size_t>(even_index)], std::move(odds));
}

SignedMultigraph theta_graph(const PretzelSpec& spec, bool invert_signs) {
    for (int p : spec.params)
        if (p % 2 != 0)
            throw OddParam("theta graph construction needs all-even parameters, got " +
                           std::to_string(p));
    int vertex_count = 2;
    for (int p : spec.params) vertex_count += std::abs(p) - 1;
    std::vector<SignedEdge> edges;
    int next_vertex = 2;
    for (int p : spec.params) {
        int steps = std::abs(p);
        int sign = (p > 0) ? -1 : 1;
        if (invert_signs) sign = -sign;
        int prev = 0;
        for (int step = 0; step < steps; ++step) {
            int next = (step == steps - 1) ? 1 : next_vertex++;
            edges.push_back({prev, next, sign});
            prev = next;
        }
    }
    return SignedMultigraph(vertex_count, std::move(edges));
}

int trace_components(const PretzelSpec& spec) {
    // Endpoint nodes per twist region: top-left, top-right, bottom-left,
    // bottom-right. An even region keeps its strands on their side, an odd
    // one swaps them; the closing arcs chain consecutive regions and wrap
    // around the outside.
    const int n = spec.n();
    std::vector<int> parent(static_cast<size_t>(4 * n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] =
                parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    auto unite = [&](int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); };
    auto tl = [](int i) { return 4 * i; };
    auto tr = [](int i) { return 4 * i + 1; };
    auto bl = [](int i) { return 4 * i + 2; };
    auto br = [](int i) { return 4 * i + 3; };

    for (int i = 0; i < n; ++i) {
        if (spec.params[static_cast<size_t>(i)] % 2 == 0) {
            unite(tl(i), bl(i));
            unite(tr(i), br(i));
        } else {
            unite(tl(i), br(i));
            unite(tr(i), bl(i));
        }
    }
    for (int i = 0; i + 1 < n; ++i) {
        unite(tr(i), tl(i + 1));
        unite(br(i), bl(i + 1));
    }
    unite(tl(0), tr(n - 1));
    unite(bl(0), br(n - 1));

    int components = 0;
    for (int x = 0; x < 4 * n; ++x)
        if (find(x) == x) ++components;
    return components;
}

}  // namespace bandix
