#pragma once

// Built-in circuit elements: D flip-flop, SR latch, multiplexer, synchronous
// composite, two-domain composite and A/B memory.
//
// Channel names: D (flip-flop, synchronous, memory data), S and R (latch),
// A and B (multiplexer data), D1 and D2 (per-domain data). Binary clocks use
// the alphabet {"0", "1"}.

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "causal/circuit.hpp"

namespace causal {

/// Positive edges of a binary clock: ticks u >= 1 with s[u-1] = 0, s[u] = 1.
std::set<Tick> posedges(const CausalSignal& clock);
std::set<Tick> posedges(std::span<const Symbol> clock);

// D flip-flop ----------------------------------------------------------------

/// {(D, latest posedge)}, undefined before the first edge.
std::optional<ChiImage> dff_chi(const CausalSignal& clock);

/// Table semantics: latch d on a rising clock, otherwise hold the last output.
/// Undefined until something has been latched.
std::optional<Symbol> dff_eval(const CausalSignal& clock, const CausalSignal& d);

CircuitElement make_dff(Alphabet data = Alphabet::binary());

// SR latch -------------------------------------------------------------------

/// (1,0) sets, (0,1) and (1,1) reset, (0,0) holds. Undefined while every tick
/// so far has been (0,0).
std::optional<Symbol> sr_eval(const CausalSignal& s, const CausalSignal& r);

/// No restriction map: neither input restricts the other. The control
/// alphabet is the single value "-".
CircuitElement make_sr_latch();

// Multiplexer ----------------------------------------------------------------

/// Select values "a" (symbol 0) and "b" (symbol 1).
Alphabet select_alphabet();

Symbol mux_eval(Symbol select, Symbol a, Symbol b);

/// {(A, t)} when "a" is selected at t, {(B, t)} otherwise.
ChiImage mux_chi(const CausalSignal& select);

CircuitElement make_mux(Alphabet data = Alphabet::binary());

// Synchronous composites -----------------------------------------------------

using RegisterState = std::vector<std::uint8_t>;

/// A register bank clocked by one clock. `peer` holds the other domain's
/// registers (as they stood before the edge) in a two-domain composite, and
/// is empty otherwise.
struct SyncSpec {
  std::size_t register_count = 0;
  RegisterState initial_state;
  AlphabetRef input_alphabet;
  AlphabetRef output_alphabet;
  std::function<RegisterState(const RegisterState& own, const RegisterState& peer, Symbol input)>
      next_state;
  std::function<Symbol(const RegisterState& state, Symbol input)> output_fn;
};

/// Every posedge plus the current tick, all on channel D.
ChiImage sync_chi(const CausalSignal& clock);

/// Registers start at initial_state and step at every posedge u <= t using
/// the input at u; the output combines the final state with the input at t.
Symbol sync_eval(const SyncSpec& spec, const CausalSignal& clock, const CausalSignal& input);

CircuitElement make_sync(SyncSpec spec, std::string name = "sync");

/// Free-running counter of the given width; ignores its binary input D and
/// outputs the count as a bit string.
SyncSpec counter_spec(std::size_t bits);

/// One register that inverts at every edge; outputs the register, ignores
/// its binary input.
SyncSpec toggler_spec();

// Two clock domains ----------------------------------------------------------

/// Clock pairs "c1/c2" with symbol = c1 * 2 + c2.
Alphabet clock_pair_alphabet();

/// Edges of each clock on its own channel plus (D1, t) and (D2, t).
ChiImage multiclock_chi(const CausalSignal& clocks);

/// Both domains step on their own edges; on a shared edge each domain's
/// next_state sees the other's pre-edge registers.
std::pair<Symbol, Symbol> multiclock_eval(const SyncSpec& first, const SyncSpec& second,
                                          const CausalSignal& clocks, const CausalSignal& in1,
                                          const CausalSignal& in2);

/// Output alphabet is the product of the domain output alphabets.
CircuitElement make_multiclock(SyncSpec first, SyncSpec second, std::string name = "multiclock");

// A/B memory -----------------------------------------------------------------

enum class Address : std::uint8_t { A, B };

/// One memory cell; empty until first written.
struct MemCell {
  Address address;
  std::optional<std::pair<Symbol, Tick>> content;
};

/// Address values "A", "B", "-" (no access).
Alphabet address_alphabet();
/// (write address)/(read address) pairs, e.g. "A/-".
Alphabet memory_control_alphabet();

/// {(D, last tick u <= t whose write address is the read address at t)};
/// undefined when nothing is read or the cell was never written.
std::optional<ChiImage> abmem_chi(const CausalSignal& control);

/// Simulates both cells: writes store the input at that tick, then the read
/// address at t selects the output.
std::optional<Symbol> abmem_eval(const CausalSignal& control, const CausalSignal& input);

CircuitElement make_abmem(Alphabet data = Alphabet::binary());

}  // namespace causal
