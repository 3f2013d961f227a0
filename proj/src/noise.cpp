#include "hsc/noise.hpp"

#include <cstring>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace hsc {

PhenomenologicalSample sample_phenomenological(const CssCode& code, double p, double q, int rounds,
                                               CounterRng& rng, bool final_round_perfect) {
    if (p < 0 || p > 1 || q < 0 || q > 1)
        throw std::invalid_argument("sample_phenomenological: probabilities must lie in [0,1]");
    if (rounds < 1) throw std::invalid_argument("sample_phenomenological: need at least one round");

    const auto& lat = code.lattice();
    const int d2 = lat.qubit_dim();
    const std::uint32_t num_checks = static_cast<std::uint32_t>(code.num_x_checks());
    const std::uint32_t num_qubits = static_cast<std::uint32_t>(code.num_qubits());

    PhenomenologicalSample out;
    out.history.rounds = rounds;
    out.history.qubit_errors.reserve(rounds);
    out.history.meas_errors.resize(rounds);
    out.record.rounds = rounds;
    out.record.final_round_perfect = final_round_perfect;
    out.record.outcomes.reserve(rounds);

    Chain cumulative(d2);
    for (int t = 0; t < rounds; ++t) {
        Chain fresh(d2);
        for (std::uint32_t f = 0; f < num_qubits; ++f)
            if (rng.bernoulli(p)) fresh.support.push_back(f);
        cumulative ^= fresh;
        out.history.qubit_errors.push_back(std::move(fresh));

        BitVec tau(num_checks);
        for (std::uint32_t e : lat.boundary(cumulative).support) tau.set(e, true);
        const bool perfect = final_round_perfect && t == rounds - 1;
        if (!perfect) {
            for (std::uint32_t e = 0; e < num_checks; ++e) {
                if (rng.bernoulli(q)) {
                    tau.flip(e);
                    out.history.meas_errors[t].push_back(e);
                }
            }
        }
        out.record.outcomes.push_back(std::move(tau));
    }
    return out;
}

namespace {

constexpr std::uint32_t kRecordMagic = 0x48534352u;  // "HSCR"
constexpr std::uint16_t kRecordVersion = 1;

template <typename T>
void put(std::ostream& os, T value) {
    unsigned char buf[sizeof(T)];
    for (std::size_t i = 0; i < sizeof(T); ++i)
        buf[i] = static_cast<unsigned char>((static_cast<std::uint64_t>(value) >> (8 * i)) & 0xFF);
    os.write(reinterpret_cast<const char*>(buf), sizeof(T));
}

template <typename T>
T get(std::istream& is) {
    unsigned char buf[sizeof(T)];
    is.read(reinterpret_cast<char*>(buf), sizeof(T));
    if (!is) throw std::runtime_error("record file truncated");
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) v |= static_cast<std::uint64_t>(buf[i]) << (8 * i);
    return static_cast<T>(v);
}

}  // namespace

void write_record(std::ostream& os, const CssCode& code, const MeasurementRecord& record) {
    const auto& lat = code.lattice();
    int d1 = 0, d2 = lat.qubit_dim();
    for (int i = 1; i <= lat.dims(); ++i)
        if (!lat.is_rough(i)) ++d1;
    put<std::uint32_t>(os, kRecordMagic);
    put<std::uint16_t>(os, kRecordVersion);
    put<std::uint8_t>(os, static_cast<std::uint8_t>(d1));
    put<std::uint8_t>(os, static_cast<std::uint8_t>(d2));
    put<std::uint8_t>(os, static_cast<std::uint8_t>(lat.dims()));
    put<std::uint8_t>(os, record.final_round_perfect ? 1 : 0);
    for (int i = 1; i <= lat.dims(); ++i) put<std::uint16_t>(os, static_cast<std::uint16_t>(lat.length_of(i)));
    put<std::uint32_t>(os, static_cast<std::uint32_t>(record.rounds));
    const std::uint32_t checks = static_cast<std::uint32_t>(code.num_x_checks());
    put<std::uint32_t>(os, checks);
    const std::size_t row_bytes = (checks + 7) / 8;
    std::vector<unsigned char> row(row_bytes);
    for (const BitVec& tau : record.outcomes) {
        std::fill(row.begin(), row.end(), 0);
        for (std::uint32_t e = 0; e < checks; ++e)
            if (tau.get(e)) row[e / 8] |= static_cast<unsigned char>(1u << (e % 8));
        os.write(reinterpret_cast<const char*>(row.data()), static_cast<std::streamsize>(row_bytes));
    }
}

LoadedRecord read_record(std::istream& is) {
    if (get<std::uint32_t>(is) != kRecordMagic) throw std::runtime_error("not a record file");
    if (get<std::uint16_t>(is) != kRecordVersion) throw std::runtime_error("unsupported record version");
    LoadedRecord out;
    out.d1 = get<std::uint8_t>(is);
    out.d2 = get<std::uint8_t>(is);
    int dims = get<std::uint8_t>(is);
    out.record.final_round_perfect = get<std::uint8_t>(is) != 0;
    out.lengths.resize(dims);
    for (int i = 0; i < dims; ++i) out.lengths[i] = get<std::uint16_t>(is);
    out.record.rounds = static_cast<int>(get<std::uint32_t>(is));
    std::uint32_t checks = get<std::uint32_t>(is);
    const std::size_t row_bytes = (checks + 7) / 8;
    std::vector<unsigned char> row(row_bytes);
    for (int t = 0; t < out.record.rounds; ++t) {
        is.read(reinterpret_cast<char*>(row.data()), static_cast<std::streamsize>(row_bytes));
        if (!is) throw std::runtime_error("record file truncated");
        BitVec tau(checks);
        for (std::uint32_t e = 0; e < checks; ++e)
            if (row[e / 8] & (1u << (e % 8))) tau.set(e, true);
        out.record.outcomes.push_back(std::move(tau));
    }
    return out;
}

}  // namespace hsc
