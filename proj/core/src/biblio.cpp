#include "specnet/biblio.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace specnet {

void validate(const BiblioRecord& b, int min_year, int max_year) {
    const int np = static_cast<int>(b.papers.size());
    for (int p = 0; p < np; ++p) {
        const auto& paper = b.papers[p];
        if (paper.year < min_year || paper.year > max_year) {
            throw std::invalid_argument("paper " + paper.id + ": year " +
                                        std::to_string(paper.year) + " outside [" +
                                        std::to_string(min_year) + ", " +
                                        std::to_string(max_year) + "]");
        }
        if (paper.authors.empty()) {
            throw std::invalid_argument("paper " + paper.id + " has no authors");
        }
        for (int a : paper.authors) {
            if (a < 0 || a >= b.author_count) {
                throw std::invalid_argument("paper " + paper.id + ": author index out of range");
            }
        }
    }
    for (const auto& [citing, cited] : b.citations) {
        if (citing < 0 || citing >= np || cited < 0 || cited >= np) {
            throw std::invalid_argument("citation references an unknown paper");
        }
        if (citing == cited) throw std::invalid_argument("paper cites itself");
    }
}

ProductivityStats productivity_by_year(const BiblioRecord& b, Counting counting) {
    if (b.papers.empty()) throw std::invalid_argument("productivity_by_year: empty record");
    ProductivityStats out;
    out.credit_per_author.assign(b.author_count, 0.0);

    std::map<int, int> papers_of_year;
    std::map<int, std::set<int>> authors_of_year;
    std::set<int> all_authors;
    for (const auto& paper : b.papers) {
        ++papers_of_year[paper.year];
        double share = counting == Counting::divided
                           ? 1.0 / static_cast<double>(paper.authors.size())
                           : 1.0;
        for (int a : paper.authors) {
            out.credit_per_author[a] += share;
            authors_of_year[paper.year].insert(a);
            all_authors.insert(a);
        }
    }
    for (const auto& [year, count] : papers_of_year) {
        ProductivityStats::YearRow row;
        row.year = year;
        row.papers = count;
        row.authors = static_cast<int>(authors_of_year[year].size());
        row.papers_per_author = static_cast<double>(count) / static_cast<double>(row.authors);
        out.by_year.push_back(row);
    }
    out.overall_papers_per_author = static_cast<double>(b.papers.size()) /
                                    static_cast<double>(all_authors.empty() ? b.author_count
                                                                            : all_authors.size());
    return out;
}

CitationStats citation_classification(const BiblioRecord& b) {
    validate(b);
    // Coauthorship relation over the whole record: authors are coauthors if
    // they share any paper in the data set.
    std::vector<std::set<int>> coauthors(b.author_count);
    for (const auto& paper : b.papers) {
        for (std::size_t x = 0; x < paper.authors.size(); ++x) {
            for (std::size_t y = x + 1; y < paper.authors.size(); ++y) {
                coauthors[paper.authors[x]].insert(paper.authors[y]);
                coauthors[paper.authors[y]].insert(paper.authors[x]);
            }
        }
    }

    CitationStats out;
    out.classes.reserve(b.citations.size());
    double delay_self = 0.0, delay_coauthor = 0.0, delay_distant = 0.0, delay_all = 0.0;
    for (const auto& [citing, cited] : b.citations) {
        const auto& from = b.papers[citing];
        const auto& to = b.papers[cited];
        bool shared_author = false;
        for (int a : from.authors) {
            if (std::find(to.authors.begin(), to.authors.end(), a) != to.authors.end()) {
                shared_author = true;
                break;
            }
        }
        CitationClass cls;
        if (shared_author) {
            cls = CitationClass::self_citation;
        } else {
            bool linked = false;
            for (int a : from.authors) {
                for (int c : to.authors) {
                    if (coauthors[a].count(c)) {
                        linked = true;
                        break;
                    }
                }
                if (linked) break;
            }
            cls = linked ? CitationClass::coauthor : CitationClass::distant;
        }
        out.classes.push_back(cls);
        double delay = from.year - to.year;
        delay_all += delay;
        switch (cls) {
        case CitationClass::self_citation:
            ++out.count_self;
            delay_self += delay;
            break;
        case CitationClass::coauthor:
            ++out.count_coauthor;
            delay_coauthor += delay;
            break;
        case CitationClass::distant:
            ++out.count_distant;
            delay_distant += delay;
            break;
        }
    }

    const double total = static_cast<double>(b.citations.size());
    if (total > 0) {
        out.proportion_self = out.count_self / total;
        out.proportion_coauthor = out.count_coauthor / total;
        out.proportion_distant = out.count_distant / total;
        out.mean_delay_overall = delay_all / total;
    }
    if (out.count_self > 0) out.mean_delay_self = delay_self / out.count_self;
    if (out.count_coauthor > 0) out.mean_delay_coauthor = delay_coauthor / out.count_coauthor;
    if (out.count_distant > 0) out.mean_delay_distant = delay_distant / out.count_distant;
    return out;
}

}  // namespace specnet
