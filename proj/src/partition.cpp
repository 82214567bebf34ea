#include "skewpp/partition.hpp"

#include <algorithm>
#include <charconv>

#include "skewpp/errors.hpp"

namespace skewpp {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    int prev = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        int p = parts_[i];
        if (p <= 0)
            throw MalformedPartition("partition part must be positive, got " + std::to_string(p));
        if (i > 0 && p > prev)
            throw MalformedPartition("partition parts must be weakly decreasing");
        prev = p;
        weight_ += p;
    }
}

int Partition::part(int row) const noexcept {
    if (row < 1 || row > rows()) return 0;
    return parts_[static_cast<std::size_t>(row - 1)];
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    auto trim = [](std::string_view s) {
        while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
        while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
        return s;
    };
    if (trim(text).empty()) return Partition{};
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::string_view token = trim(text.substr(pos, comma == std::string_view::npos ? comma : comma - pos));
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty())
            throw MalformedPartition("bad partition token '" + std::string(token) + "'");
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

Partition Partition::conjugate() const {
    std::vector<int> conj;
    if (!parts_.empty()) {
        conj.resize(static_cast<std::size_t>(parts_[0]));
        for (int j = 1; j <= parts_[0]; ++j) {
            int count = 0;
            for (int p : parts_)
                if (p >= j) ++count;
            conj[static_cast<std::size_t>(j - 1)] = count;
        }
    }
    return Partition(std::move(conj));
}

std::string Partition::str() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

bool contains(const Partition& inner, const Partition& outer) noexcept {
    if (inner.rows() > outer.rows()) return false;
    for (int i = 1; i <= inner.rows(); ++i)
        if (inner.part(i) > outer.part(i)) return false;
    return true;
}

namespace {

void emit_partitions(int remaining, int max_part, std::vector<int>& prefix,
                     std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        prefix.push_back(p);
        emit_partitions(remaining - p, p, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int weight) {
    std::vector<Partition> out;
    if (weight <= 0) return out;
    std::vector<int> prefix;
    emit_partitions(weight, weight, prefix, out);
    return out;
}

std::vector<Partition> enumerate_partitions(int max_weight) {
    std::vector<Partition> out;
    for (int w = 1; w <= max_weight; ++w) {
        auto of_w = partitions_of(w);
        out.insert(out.end(), of_w.begin(), of_w.end());
    }
    return out;
}

} // namespace skewpp
