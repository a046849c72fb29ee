#pragma once

#include <string>
#include <vector>

#include "report.hpp"

namespace padicres::cli {

struct CommonOptions {
    Format format = Format::table;
    unsigned threads = 1;
    unsigned long truncate = 0;
    bool verify = false;
};

struct ResOptions {
    std::string poly;
    unsigned long p = 2;
    std::string levels;
    std::string mask = "full";
    /// Custom mask: one index list per variable, "0,1;1,2".
    std::string indices;
};

struct ClimitOptions {
    std::string poly;
    unsigned long p = 2;
    unsigned long K = 3;
    std::size_t vars = 0;
    std::string mask = "full";
    std::string sequence = "raw";
};

struct IwasawaOptions {
    std::string poly;
    unsigned long p = 2;
    unsigned long n_max = 5;
};

struct LinkOptions {
    std::string spec;
    unsigned long p = 2;
    std::string levels;
    unsigned long limit_digits = 0;
};

struct WhiteheadOptions {
    long k = 1;
    unsigned long p = 2;
    unsigned long K = 3;
    unsigned long truncation = 5;
    unsigned long two_part = 0;
};

/// "1,2,3" -> {1, 2, 3}.
std::vector<unsigned long> parse_levels(const std::string& text);

/// Number of variables named in polynomial text: the largest tN, or 1.
std::size_t infer_num_vars(const std::string& text);

Report cmd_res(const ResOptions& o, const CommonOptions& c);
Report cmd_climit(const ClimitOptions& o, const CommonOptions& c);
Report cmd_iwasawa(const IwasawaOptions& o, const CommonOptions& c);
Report cmd_linkh1(const LinkOptions& o, const CommonOptions& c);
Report cmd_whitehead(const WhiteheadOptions& o, const CommonOptions& c);

} // namespace padicres::cli
