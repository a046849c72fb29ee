#pragma once

#include <ostream>
#include <string>

#include <json.hpp>

#include "padicres/padic/padic.hpp"
#include "padicres/poly/integer.hpp"

namespace padicres::cli {

enum class Format { table, json };

/// Ordered key/value record printed either as an aligned table or as one
/// JSON object.
class Report {
public:
    explicit Report(unsigned long truncate_digits = 0) : truncate_(truncate_digits) {}

    nlohmann::ordered_json& operator[](const std::string& key) { return doc_[key]; }

    /// Decimal string, shortened to the configured digit count when asked;
    /// a shortened integer marks the whole report as non-canonical.
    std::string integer(const Integer& x);
    nlohmann::ordered_json padic(const padic::PadicApprox& x);

    /// The computation hit an explicitly reported degenerate case.
    void mark_degenerate() { degenerate_ = true; }
    bool degenerate() const noexcept { return degenerate_; }

    void print(std::ostream& out, Format format) const;

private:
    unsigned long truncate_;
    bool canonical_ = true;
    bool degenerate_ = false;
    nlohmann::ordered_json doc_ = nlohmann::ordered_json::object();
};

} // namespace padicres::cli
