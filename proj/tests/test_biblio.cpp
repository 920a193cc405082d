#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "specnet/biblio.hpp"

using namespace specnet;

namespace {

BiblioRecord tiny_record() {
    BiblioRecord b;
    b.author_count = 4;
    b.papers = {
        {"p0", 2003, {0, 1}},     // X and Y together
        {"p1", 2005, {0}},        // X alone
        {"p2", 2006, {2}},        // Z alone
        {"p3", 2007, {3}},        // W alone
    };
    // p1 cites p0: shared author 0 -> self
    // p2 cites p0: author 2 never coauthored with 0 or 1 -> distant
    // p3 cites p1: 3 vs 0, no link -> distant; then make 3 a coauthor case below
    b.citations = {{1, 0}, {2, 0}, {3, 1}};
    return b;
}

}  // namespace

TEST_CASE("validation rejects malformed records") {
    BiblioRecord b = tiny_record();
    validate(b);

    BiblioRecord self_cite = b;
    self_cite.citations.push_back({1, 1});
    CHECK_THROWS_AS(validate(self_cite), std::invalid_argument);

    BiblioRecord bad_year = b;
    bad_year.papers[0].year = 1850;
    CHECK_THROWS_AS(validate(bad_year), std::invalid_argument);

    BiblioRecord bad_author = b;
    bad_author.papers[0].authors.push_back(9);
    CHECK_THROWS_AS(validate(bad_author), std::invalid_argument);

    BiblioRecord bad_citation = b;
    bad_citation.citations.push_back({0, 99});
    CHECK_THROWS_AS(validate(bad_citation), std::invalid_argument);
}

TEST_CASE("divided counting credits 1/K per coauthor") {
    BiblioRecord b;
    b.author_count = 2;
    b.papers = {{"p", 2004, {0, 1}}};
    ProductivityStats s = productivity_by_year(b, Counting::divided);
    CHECK(s.credit_per_author[0] == doctest::Approx(0.5));
    CHECK(s.credit_per_author[1] == doctest::Approx(0.5));
    ProductivityStats full = productivity_by_year(b, Counting::non_divided);
    CHECK(full.credit_per_author[0] == doctest::Approx(1.0));
}

TEST_CASE("per-year ratios") {
    BiblioRecord b;
    b.author_count = 3;
    b.papers = {{"a", 2004, {0}}, {"b", 2004, {1}}, {"c", 2004, {2}}};
    ProductivityStats s = productivity_by_year(b, Counting::divided);
    REQUIRE(s.by_year.size() == 1);
    CHECK(s.by_year[0].year == 2004);
    CHECK(s.by_year[0].papers == 3);
    CHECK(s.by_year[0].authors == 3);
    CHECK(s.by_year[0].papers_per_author == doctest::Approx(1.0));
    CHECK(s.overall_papers_per_author == doctest::Approx(1.0));

    CHECK_THROWS_AS(productivity_by_year(BiblioRecord{}, Counting::divided),
                    std::invalid_argument);
}

TEST_CASE("per-year rows accumulate distinct authors") {
    BiblioRecord b = tiny_record();
    ProductivityStats s = productivity_by_year(b, Counting::divided);
    REQUIRE(s.by_year.size() == 4);
    CHECK(s.by_year[0].year == 2003);
    CHECK(s.by_year[0].authors == 2);
    // overall: 4 papers over 4 distinct authors
    CHECK(s.overall_papers_per_author == doctest::Approx(1.0));
}

TEST_CASE("citation classes") {
    BiblioRecord b = tiny_record();
    CitationStats s = citation_classification(b);
    REQUIRE(s.classes.size() == 3);
    CHECK(s.classes[0] == CitationClass::self_citation);   // shared author 0
    CHECK(s.classes[1] == CitationClass::distant);
    CHECK(s.classes[2] == CitationClass::distant);

    // author 3 coauthors with author 0 on a new paper -> citation p3->p1
    // becomes a coauthor citation
    b.papers.push_back({"p4", 2008, {0, 3}});
    CitationStats s2 = citation_classification(b);
    CHECK(s2.classes[2] == CitationClass::coauthor);
    CHECK(s2.count_self + s2.count_coauthor + s2.count_distant ==
          static_cast<long long>(b.citations.size()));

    CHECK(s2.proportion_self == doctest::Approx(1.0 / 3.0));
    CHECK(s2.mean_delay_self == doctest::Approx(2.0));       // 2005 - 2003
    CHECK(s2.mean_delay_coauthor == doctest::Approx(2.0));   // 2007 - 2005
    CHECK(s2.mean_delay_distant == doctest::Approx(3.0));    // 2006 - 2003
    CHECK(s2.mean_delay_overall == doctest::Approx((2.0 + 3.0 + 2.0) / 3.0));
}
