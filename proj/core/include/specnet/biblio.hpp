#pragma once

#include <string>
#include <vector>

#include "specnet/graph.hpp"

namespace specnet {

/// Paper-level metadata plus paper-level citation pairs, the inputs for
/// productivity and citation-pattern statistics.
struct BiblioRecord {
    struct Paper {
        std::string id;
        int year = 0;
        std::vector<int> authors;  // author indices, deduplicated
    };

    std::vector<Paper> papers;
    std::vector<std::pair<int, int>> citations;  // (citing paper, cited paper), by index
    int author_count = 0;
};

/// Checks citation endpoints, self-citing papers (paper citing itself),
/// author indices and the year range.  Throws std::invalid_argument.
void validate(const BiblioRecord& b, int min_year = 1900, int max_year = 2100);

enum class Counting { divided, non_divided };

struct ProductivityStats {
    struct YearRow {
        int year = 0;
        int papers = 0;
        int authors = 0;               // distinct authors publishing that year
        double papers_per_author = 0;  // papers / authors
    };

    std::vector<YearRow> by_year;           // ascending year
    std::vector<double> credit_per_author;  // per paper: 1 (non_divided) or 1/K (divided)
    double overall_papers_per_author = 0;   // total papers / total authors in the record
};

/// Per-year paper and author totals plus per-author paper credits under
/// the chosen counting mode.  Rejects empty records.
ProductivityStats productivity_by_year(const BiblioRecord& b, Counting counting);

enum class CitationClass { self_citation, coauthor, distant };

struct CitationStats {
    std::vector<CitationClass> classes;  // aligned with BiblioRecord::citations
    long long count_self = 0, count_coauthor = 0, count_distant = 0;
    double proportion_self = 0, proportion_coauthor = 0, proportion_distant = 0;
    double mean_delay_self = 0, mean_delay_coauthor = 0, mean_delay_distant = 0;
    double mean_delay_overall = 0;
};

/// Classifies every citation:
///   self     - citing and cited papers share at least one author;
///   coauthor - not self, but some citing author has coauthored any paper
///              in the record with some cited author;
///   distant  - neither.
/// Delay is citing year minus cited year.
CitationStats citation_classification(const BiblioRecord& b);

}  // namespace specnet
