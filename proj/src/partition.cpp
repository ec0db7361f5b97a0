#include "partition.hpp"

#include <algorithm>
#include <numeric>

namespace ydc {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) fail(errc::invalid_input, "partition part must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            fail(errc::invalid_input, "partition not weakly decreasing");
    }
}

Partition Partition::parse(const std::string& text) {
    if (text.empty() || text == "0") return Partition{};
    std::vector<int> parts;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        const std::string tok = text.substr(pos, comma - pos);
        if (tok.empty()) fail(errc::invalid_input, "empty partition entry");
        size_t consumed = 0;
        int value = 0;
        try {
            value = std::stoi(tok, &consumed);
        } catch (const std::exception&) {
            fail(errc::invalid_input, "bad partition entry: '" + tok + "'");
        }
        if (consumed != tok.size()) fail(errc::invalid_input, "bad partition entry: '" + tok + "'");
        parts.push_back(value);
        if (comma == text.size()) break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::row(int i) const {
    if (i < 1) fail(errc::invalid_input, "row index is 1-based");
    return i <= length() ? parts_[i - 1] : 0;
}

Partition Partition::conjugate() const {
    std::vector<int> out;
    if (parts_.empty()) return Partition{};
    out.resize(parts_[0]);
    for (int c = 1; c <= parts_[0]; ++c) {
        int h = 0;
        for (int p : parts_)
            if (p >= c) ++h;
        out[c - 1] = h;
    }
    return Partition(std::move(out));
}

Partition Partition::anisotropic_scale(int alpha) const {
    if (alpha <= 0) fail(errc::invalid_input, "scale factor must be positive");
    std::vector<int> out = parts_;
    for (int& p : out) p *= alpha;
    return Partition(std::move(out));
}

Partition Partition::dilate(int t) const {
    if (t <= 0) fail(errc::invalid_input, "dilation factor must be positive");
    std::vector<int> out;
    out.reserve(parts_.size() * t);
    for (int p : parts_)
        for (int r = 0; r < t; ++r) out.push_back(p * t);
    return Partition(std::move(out));
}

bool Partition::contains_box(int col, int row_index) const {
    if (col < 1 || row_index < 1) return false;
    return row_index <= length() && col <= parts_[row_index - 1];
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "";
    std::string out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

namespace {

void emit_partitions(int remaining, int cap, std::vector<int>& acc,
                     std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(acc));
        return;
    }
    for (int next = std::min(cap, remaining); next >= 1; --next) {
        acc.push_back(next);
        emit_partitions(remaining - next, next, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) fail(errc::invalid_input, "negative partition size");
    std::vector<Partition> out;
    std::vector<int> acc;
    emit_partitions(n, n, acc, out);
    return out;
}

std::vector<Partition> partitions_up_to(int n) {
    std::vector<Partition> out;
    for (int k = 0; k <= n; ++k) {
        auto batch = partitions_of(k);
        out.insert(out.end(), batch.begin(), batch.end());
    }
    return out;
}

}  // namespace ydc
