#include "ramsey/trichotomy.hpp"

#include "ramsey/errors.hpp"

namespace ramsey {

std::string_view to_string(TrichotomyBranch branch)
{
    switch (branch) {
    case TrichotomyBranch::all_m: return "all-m";
    case TrichotomyBranch::rainbow: return "rainbow";
    case TrichotomyBranch::star: return "star";
    case TrichotomyBranch::violated: return "violated";
    }
    return "unknown";
}

TrichotomyReport verify_trichotomy(const Colouring& c, std::size_t n_target, const SearchBudget& budget)
{
    if (n_target == 0)
        throw ArgumentError("n_target must be at least 1");
    TrichotomyReport report;
    report.n_target = n_target;
    for (std::size_t m = 1; m <= n_target; ++m) {
        if (auto w = find_m_coloured(c, m, budget))
            report.witnesses.emplace(m, std::move(*w));
        else
            report.missing.push_back(m);
    }
    report.all_m = report.missing.empty();
    if (n_target <= c.n()) {
        report.rainbow = first_canonical_subset(c, n_target, CanonicalKind::rainbow, c.vertices());
        report.star = first_canonical_subset(c, n_target, CanonicalKind::star, c.vertices());
    }
    if (report.all_m)
        report.branch = TrichotomyBranch::all_m;
    else if (report.rainbow)
        report.branch = TrichotomyBranch::rainbow;
    else if (report.star)
        report.branch = TrichotomyBranch::star;
    return report;
}

} // namespace ramsey
