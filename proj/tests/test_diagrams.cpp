#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <utility>
#include <vector>

#include "qweb/diagrams.hpp"
#include "qweb/tableaux.hpp"
#include "qweb/webs.hpp"

using qweb::build_diagram;
using qweb::canonicalize;
using qweb::check_B_conditions;
using qweb::CrossedDiagram;
using qweb::CrossOrient;
using qweb::diagram_key;
using qweb::Laurent;
using qweb::Partition;
using qweb::PositiveStats;
using qweb::RegionClass;
using qweb::resolve_crossing;
using qweb::resolve_naive;
using qweb::resolve_positive;
using qweb::Row;
using qweb::Web;
using qweb::WebCombination;

namespace {

Laurent q_pow(int k) { return Laurent::monomial(k, 1); }

Row cross_at(int pos) { return Row{Row::Kind::cross, pos, CrossOrient::ne_over_sw}; }
Row capcup_at(int pos) { return Row{Row::Kind::capcup, pos, CrossOrient::ne_over_sw}; }

WebCombination single(const Web& w, const Laurent& c) {
    WebCombination out;
    out.add(w, c);
    return out;
}

WebCombination act_word(const Web& w0, const std::vector<int>& word) {
    WebCombination v = single(w0, Laurent::one());
    for (int i : word) v = qweb::act_T(v, i);
    return v;
}

// all (n, r) with 2n + r = d, i.e. the shapes with at most two rows
std::vector<std::pair<int, int>> web_shapes(int d) {
    std::vector<std::pair<int, int>> out;
    for (int n = 0; 2 * n <= d; ++n) out.emplace_back(n, d - 2 * n);
    return out;
}

Partition column_shape(int n, int r) {
    std::vector<int> parts(n, 2);
    parts.insert(parts.end(), r, 1);
    return Partition(parts);
}

}  // namespace

TEST_CASE("single crossing resolves to q times the identity plus a cap-cup") {
    const Web w = Web::from_word("()|");
    const CrossedDiagram d = build_diagram(w, {2});
    REQUIRE(d.rows.size() == 1);
    REQUIRE(d.rows[0].kind == Row::Kind::cross);

    WebCombination expected = single(w, q_pow(1));
    expected.add(Web::from_word("|()"), Laurent::one());
    CHECK(resolve_naive(d) == expected);
    CHECK(act_word(w, {2}) == expected);
}

TEST_CASE("cap-cups absorb into the web from the top") {
    SECTION("an arc on the same lanes closes into a loop") {
        const CrossedDiagram d{Web::from_word("()"), {capcup_at(1)}, 0};
        const auto c = canonicalize(d);
        REQUIRE(c.has_value());
        CHECK(c->top == Web::from_word("()"));
        CHECK(c->rows.empty());
        CHECK(c->bubbles == 1);
        CHECK(resolve_naive(d) == single(Web::from_word("()"), -qweb::quantum_int(2)));
    }
    SECTION("joining two through-strings kills the term") {
        const CrossedDiagram d{Web::from_word("||"), {capcup_at(1)}, 0};
        CHECK(!canonicalize(d).has_value());
        CHECK(resolve_naive(d).terms.empty());
    }
    SECTION("consecutive cap-cups absorb one after the other") {
        const CrossedDiagram d{Web::from_word("()|"), {capcup_at(2), capcup_at(2)}, 0};
        const auto c = canonicalize(d);
        REQUIRE(c.has_value());
        CHECK(c->top == Web::from_word("|()"));
        CHECK(c->rows.empty());
        CHECK(c->bubbles == 1);
    }
    SECTION("a blocked stacked pair collapses to one cap-cup and a loop") {
        const CrossedDiagram d{Web::from_word("()()"), {cross_at(2), capcup_at(1), capcup_at(1)}, 0};
        const auto c = canonicalize(d);
        REQUIRE(c.has_value());
        CHECK(c->rows.size() == 2);
        CHECK(c->rows[0].kind == Row::Kind::cross);
        CHECK(c->rows[1].kind == Row::Kind::capcup);
        CHECK(c->bubbles == 1);
    }
}

TEST_CASE("strand tracing pairs the boundary points") {
    SECTION("a bare web pairs like its arcs") {
        const CrossedDiagram d{Web::from_word("()|"), {}, 0};
        CHECK(qweb::traced_pairing(d) == std::vector<int>{2, 1, 4, 3});
    }
    SECTION("a crossing reroutes the strands") {
        const CrossedDiagram d = build_diagram(Web::from_word("()|"), {2});
        CHECK(qweb::traced_pairing(d) == std::vector<int>{3, 4, 1, 2});
    }
    SECTION("commuting crossings give identical keys") {
        const Web w0 = qweb::min_web(3, 0);
        CHECK(diagram_key(build_diagram(w0, {2, 4})) == diagram_key(build_diagram(w0, {4, 2})));
        CHECK(!(diagram_key(build_diagram(w0, {2})) == diagram_key(build_diagram(w0, {4}))));
    }
}

TEST_CASE("three crossings over the minimal six-point web resolve as expected") {
    const Web w0 = qweb::min_web(3, 0);
    const CrossedDiagram d = build_diagram(w0, {4, 2, 3});

    SECTION("leaves contributing to the minimal web") {
        std::vector<std::pair<Laurent, int>> hits;  // (coefficient, bubbles)
        resolve_naive(d, [&](const Laurent& c, const Web& w, int bubbles) {
            if (w == w0) hits.emplace_back(c, bubbles);
        });
        REQUIRE(hits.size() == 4);
        const auto count = [&](const Laurent& c, int bubbles) {
            return std::count(hits.begin(), hits.end(), std::pair<Laurent, int>{c, bubbles});
        };
        CHECK(count(q_pow(3), 0) == 1);
        CHECK(count(q_pow(2), 1) == 1);
        CHECK(count(q_pow(1), 0) == 2);

        Laurent total = Laurent::zero();
        for (const auto& [c, bubbles] : hits)
            total += bubbles == 0 ? c : c * -qweb::quantum_int(2);
        CHECK(total == q_pow(1));
    }

    SECTION("full resolution agrees with the generator action") {
        WebCombination expected = single(w0, q_pow(1));
        expected.add(Web::from_word("(())()"), q_pow(2));
        expected.add(Web::from_word("()(())"), q_pow(2));
        expected.add(Web::from_word("(()())"), q_pow(1));
        expected.add(Web::from_word("((()))"), Laurent::one());
        CHECK(resolve_naive(d) == expected);
        CHECK(act_word(w0, {4, 2, 3}) == expected);
        CHECK(resolve_positive(d) == expected);
    }

    SECTION("its complement has exactly one bounded region, a triangle") {
        const auto regions = qweb::bounded_regions(d);
        REQUIRE(regions.size() == 1);
        CHECK(regions[0].cls == RegionClass::triangle);
        std::vector<int> corners = regions[0].corners;
        std::sort(corners.begin(), corners.end());
        CHECK(corners == std::vector<int>{0, 1, 2});
        CHECK(regions[0].north_all_unbounded);
        CHECK(regions[0].west_all_unbounded);
        CHECK(regions[0].bounded_south.empty());
        const auto b = check_B_conditions(d);
        CHECK(b.no_loops);
        CHECK(b.faces_admissible);
        CHECK(b.south_squares);
    }
}

TEST_CASE("two crossings joined by a turnback cancel up to a factor of q") {
    SECTION("arc to the left of the through-string") {
        const CrossedDiagram d{Web::from_word("()|"), {cross_at(2), cross_at(1)}, 0};
        const auto regions = qweb::bounded_regions(d);
        REQUIRE(regions.size() == 1);
        CHECK(regions[0].cls == RegionClass::bigon);

        const auto moved = qweb::reidemeister_II(d, 0, 1);
        REQUIRE(moved.has_value());
        CHECK(moved->top == Web::from_word("|()"));
        CHECK(moved->rows.empty());
        CHECK(moved->bubbles == 0);

        const WebCombination expected = single(Web::from_word("|()"), q_pow(1));
        CHECK(resolve_naive(d) == expected);
        PositiveStats stats;
        CHECK(resolve_positive(d, &stats) == expected);
        CHECK(stats.rii_moves == 1);
    }
    SECTION("arc to the right of the through-string") {
        const CrossedDiagram d{Web::from_word("|()"), {cross_at(1), cross_at(2)}, 0};
        const auto regions = qweb::bounded_regions(d);
        REQUIRE(regions.size() == 1);
        CHECK(regions[0].cls == RegionClass::bigon);

        const auto moved = qweb::reidemeister_II(d, 0, 1);
        REQUIRE(moved.has_value());
        CHECK(moved->top == Web::from_word("()|"));

        const WebCombination expected = single(Web::from_word("()|"), q_pow(1));
        CHECK(resolve_naive(d) == expected);
        PositiveStats stats;
        CHECK(resolve_positive(d, &stats) == expected);
        CHECK(stats.rii_moves == 1);
    }
}

TEST_CASE("the resolution site does not change the result") {
    const Web w0 = qweb::min_web(3, 0);
    const CrossedDiagram d = build_diagram(w0, {4, 2, 3});
    const WebCombination full = resolve_naive(d);
    for (std::size_t site = 0; site < 3; ++site) {
        WebCombination assembled;
        for (const auto& [c, child] : resolve_crossing(d, site))
            assembled += resolve_naive(child).scaled(c);
        CHECK(assembled == full);
    }
}

TEST_CASE("different reduced words build diagrams with the same resolution") {
    const Web w0 = qweb::min_web(3, 0);
    CHECK(resolve_naive(build_diagram(w0, {2, 4})) == resolve_naive(build_diagram(w0, {4, 2})));
    CHECK(resolve_naive(build_diagram(w0, {4, 2, 3})) ==
          resolve_naive(build_diagram(w0, {2, 4, 3})));
}

TEST_CASE("every route computes the same web image") {
    int words = 0;
    for (int d = 1; d <= 8; ++d) {
        for (const auto& [n, r] : web_shapes(d)) {
            const Web w0 = qweb::min_web(n, r);
            for (const auto& t : qweb::enumerate_std(column_shape(n, r))) {
                const std::vector<int> word = qweb::reduced_word_to(t);
                const CrossedDiagram diagram = build_diagram(w0, word);
                const WebCombination algebraic = act_word(w0, word);
                CHECK(resolve_naive(diagram) == algebraic);
                CHECK(resolve_positive(diagram) == algebraic);
                ++words;
            }
        }
    }
    CHECK(words > 100);
}

TEST_CASE("positive resolution keeps admissible diagrams and nonnegative coefficients") {
    for (int d = 1; d <= 8; ++d) {
        for (const auto& [n, r] : web_shapes(d)) {
            const Web w0 = qweb::min_web(n, r);
            for (const auto& t : qweb::enumerate_std(column_shape(n, r))) {
                const CrossedDiagram diagram = build_diagram(w0, qweb::reduced_word_to(t));
                const auto b = check_B_conditions(diagram);
                CHECK(b.no_loops);
                CHECK(b.faces_admissible);
                CHECK(b.south_squares);
                PositiveStats stats;
                const WebCombination image = resolve_positive(diagram, &stats);
                CHECK(stats.b_checks > 0);
                CHECK(stats.uncertified_inputs == 0);
                for (const auto& [w, c] : image.terms) {
                    CHECK(c.has_nonnegative_coeffs());
                    CHECK(c.min_exp() >= 0);
                }
            }
        }
    }
}

TEST_CASE("two ten-point diagrams admit no fully admissible order yet resolve bubble-free") {
    const Web w0 = qweb::min_web(4, 2);
    const std::vector<std::vector<int>> words = {{8, 9, 6, 7, 8, 4, 5, 6, 7, 2, 3, 4, 5},
                                                 {8, 9, 6, 7, 8, 4, 5, 6, 7, 2, 3, 4, 5, 6}};
    for (const auto& word : words) {
        const CrossedDiagram diagram = build_diagram(w0, word);
        PositiveStats stats;
        const WebCombination image = resolve_positive(diagram, &stats);
        CHECK(stats.uncertified_inputs == 1);
        CHECK(image == resolve_naive(diagram));
        CHECK(image == act_word(w0, word));
        for (const auto& [w, c] : image.terms) {
            CHECK(c.has_nonnegative_coeffs());
            CHECK(c.min_exp() >= 0);
        }
    }
}
