#include "causal/builtins.hpp"

#include <array>

namespace causal {

namespace {

const ChannelId kD{"D"};
const ChannelId kD1{"D1"};
const ChannelId kD2{"D2"};
const ChannelId kA{"A"};
const ChannelId kB{"B"};

constexpr Symbol kNoAddress = 2;

void require_binary(const CausalSignal& s, const char* what) {
  if (s.trace().alphabet()->size() != 2) {
    throw UsageError(std::string(what) + ": expected a binary signal");
  }
}

bool is_posedge(std::span<const Symbol> clock, std::size_t u) {
  return u >= 1 && clock[u - 1] == 0 && clock[u] == 1;
}

std::vector<Symbol> clock_component(const CausalSignal& clocks, int which) {
  std::vector<Symbol> out;
  out.reserve(clocks.t().index + 1);
  for (Symbol s : clocks.samples()) {
    out.push_back(which == 0 ? static_cast<Symbol>(s >> 1) : static_cast<Symbol>(s & 1));
  }
  return out;
}

Symbol write_address(Symbol control) { return static_cast<Symbol>(control / 3); }
Symbol read_address(Symbol control) { return static_cast<Symbol>(control % 3); }

std::uint64_t register_value(const RegisterState& q) {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    v |= static_cast<std::uint64_t>(q[i] & 1U) << i;
  }
  return v;
}

}  // namespace

std::set<Tick> posedges(std::span<const Symbol> clock) {
  std::set<Tick> edges;
  for (std::size_t u = 1; u < clock.size(); ++u) {
    if (is_posedge(clock, u)) {
      edges.insert(Tick{u});
    }
  }
  return edges;
}

std::set<Tick> posedges(const CausalSignal& clock) {
  require_binary(clock, "posedges");
  return posedges(clock.samples());
}

std::optional<ChiImage> dff_chi(const CausalSignal& clock) {
  require_binary(clock, "dff_chi");
  auto edges = posedges(clock.samples());
  if (edges.empty()) {
    return std::nullopt;
  }
  return ChiImage({RefPoint{kD, *edges.rbegin()}});
}

std::optional<Symbol> dff_eval(const CausalSignal& clock, const CausalSignal& d) {
  require_binary(clock, "dff_eval");
  std::optional<Symbol> q;
  for (std::size_t u = 0; u <= clock.t().index; ++u) {
    if (is_posedge(clock.samples(), u)) {
      q = d[u];
    }
  }
  return q;
}

CircuitElement make_dff(Alphabet data) {
  auto data_ref = make_alphabet(std::move(data));
  CircuitElement e;
  e.name = "dff";
  e.control_alphabet = make_alphabet(Alphabet::binary());
  e.inputs = {{kD, data_ref}};
  e.output_alphabet = data_ref;
  e.eval = [](const CausalSignal& clock, std::span<const CausalSignal> in) {
    return dff_eval(clock, in[0]);
  };
  e.chi = RestrictionMap(dff_chi);
  return e;
}

std::optional<Symbol> sr_eval(const CausalSignal& s, const CausalSignal& r) {
  require_binary(s, "sr_eval");
  require_binary(r, "sr_eval");
  std::optional<Symbol> q;
  for (std::size_t u = 0; u <= s.t().index; ++u) {
    if (s[u] == 1 && r[u] == 0) {
      q = 1;
    } else if (r[u] == 1) {
      q = 0;
    }
  }
  return q;
}

CircuitElement make_sr_latch() {
  auto bit = make_alphabet(Alphabet::binary());
  CircuitElement e;
  e.name = "srlatch";
  e.control_alphabet = make_alphabet(Alphabet{"-"});
  e.inputs = {{ChannelId{"S"}, bit}, {ChannelId{"R"}, bit}};
  e.output_alphabet = bit;
  e.eval = [](const CausalSignal&, std::span<const CausalSignal> in) {
    return sr_eval(in[0], in[1]);
  };
  return e;
}

Alphabet select_alphabet() { return Alphabet{"a", "b"}; }

Symbol mux_eval(Symbol select, Symbol a, Symbol b) { return select == 0 ? a : b; }

ChiImage mux_chi(const CausalSignal& select) {
  return ChiImage({RefPoint{select.current() == 0 ? kA : kB, select.t()}});
}

CircuitElement make_mux(Alphabet data) {
  auto data_ref = make_alphabet(std::move(data));
  CircuitElement e;
  e.name = "mux";
  e.control_alphabet = make_alphabet(select_alphabet());
  e.inputs = {{kA, data_ref}, {kB, data_ref}};
  e.output_alphabet = data_ref;
  e.eval = [](const CausalSignal& sel, std::span<const CausalSignal> in) -> std::optional<Symbol> {
    return mux_eval(sel.current(), in[0].current(), in[1].current());
  };
  e.chi = RestrictionMap([](const CausalSignal& sel) -> std::optional<ChiImage> {
    return mux_chi(sel);
  });
  return e;
}

ChiImage sync_chi(const CausalSignal& clock) {
  require_binary(clock, "sync_chi");
  std::vector<RefPoint> refs;
  for (Tick u : posedges(clock.samples())) {
    refs.push_back({kD, u});
  }
  refs.push_back({kD, clock.t()});
  return ChiImage(std::move(refs));
}

Symbol sync_eval(const SyncSpec& spec, const CausalSignal& clock, const CausalSignal& input) {
  require_binary(clock, "sync_eval");
  RegisterState state = spec.initial_state;
  const RegisterState none;
  for (std::size_t u = 0; u <= clock.t().index; ++u) {
    if (is_posedge(clock.samples(), u)) {
      state = spec.next_state(state, none, input[u]);
    }
  }
  return spec.output_fn(state, input.current());
}

CircuitElement make_sync(SyncSpec spec, std::string name) {
  CircuitElement e;
  e.name = std::move(name);
  e.control_alphabet = make_alphabet(Alphabet::binary());
  e.inputs = {{kD, spec.input_alphabet}};
  e.output_alphabet = spec.output_alphabet;
  e.eval = [spec = std::move(spec)](const CausalSignal& clock,
                                    std::span<const CausalSignal> in) -> std::optional<Symbol> {
    return sync_eval(spec, clock, in[0]);
  };
  e.chi = RestrictionMap([](const CausalSignal& clock) -> std::optional<ChiImage> {
    return sync_chi(clock);
  });
  return e;
}

SyncSpec counter_spec(std::size_t bits) {
  SyncSpec spec;
  spec.register_count = bits;
  spec.initial_state.assign(bits, 0);
  spec.input_alphabet = make_alphabet(Alphabet::binary());
  spec.output_alphabet = make_alphabet(Alphabet::bit_strings(bits));
  spec.next_state = [bits](const RegisterState& q, const RegisterState&, Symbol) {
    const std::uint64_t next = (register_value(q) + 1) & ((std::uint64_t{1} << bits) - 1);
    RegisterState out(bits);
    for (std::size_t i = 0; i < bits; ++i) {
      out[i] = static_cast<std::uint8_t>((next >> i) & 1U);
    }
    return out;
  };
  spec.output_fn = [](const RegisterState& q, Symbol) {
    return static_cast<Symbol>(register_value(q));
  };
  return spec;
}

SyncSpec toggler_spec() {
  SyncSpec spec;
  spec.register_count = 1;
  spec.initial_state = {0};
  spec.input_alphabet = make_alphabet(Alphabet::binary());
  spec.output_alphabet = make_alphabet(Alphabet::binary());
  spec.next_state = [](const RegisterState& q, const RegisterState&, Symbol) {
    return RegisterState{static_cast<std::uint8_t>(q[0] ^ 1U)};
  };
  spec.output_fn = [](const RegisterState& q, Symbol) { return static_cast<Symbol>(q[0]); };
  return spec;
}

Alphabet clock_pair_alphabet() {
  return Alphabet::product(Alphabet::binary(), Alphabet::binary());
}

ChiImage multiclock_chi(const CausalSignal& clocks) {
  std::vector<RefPoint> refs;
  for (Tick u : posedges(clock_component(clocks, 0))) {
    refs.push_back({kD1, u});
  }
  for (Tick u : posedges(clock_component(clocks, 1))) {
    refs.push_back({kD2, u});
  }
  refs.push_back({kD1, clocks.t()});
  refs.push_back({kD2, clocks.t()});
  return ChiImage(std::move(refs));
}

std::pair<Symbol, Symbol> multiclock_eval(const SyncSpec& first, const SyncSpec& second,
                                          const CausalSignal& clocks, const CausalSignal& in1,
                                          const CausalSignal& in2) {
  const auto c1 = clock_component(clocks, 0);
  const auto c2 = clock_component(clocks, 1);
  RegisterState q1 = first.initial_state;
  RegisterState q2 = second.initial_state;
  for (std::size_t u = 0; u <= clocks.t().index; ++u) {
    const bool e1 = is_posedge(c1, u);
    const bool e2 = is_posedge(c2, u);
    // Both domains read pre-edge state.
    RegisterState n1 = e1 ? first.next_state(q1, q2, in1[u]) : q1;
    RegisterState n2 = e2 ? second.next_state(q2, q1, in2[u]) : q2;
    q1 = std::move(n1);
    q2 = std::move(n2);
  }
  return {first.output_fn(q1, in1.current()), second.output_fn(q2, in2.current())};
}

CircuitElement make_multiclock(SyncSpec first, SyncSpec second, std::string name) {
  CircuitElement e;
  e.name = std::move(name);
  e.control_alphabet = make_alphabet(clock_pair_alphabet());
  e.inputs = {{kD1, first.input_alphabet}, {kD2, second.input_alphabet}};
  e.output_alphabet =
      make_alphabet(Alphabet::product(*first.output_alphabet, *second.output_alphabet));
  const std::size_t second_size = second.output_alphabet->size();
  e.eval = [first = std::move(first), second = std::move(second), second_size](
               const CausalSignal& clocks,
               std::span<const CausalSignal> in) -> std::optional<Symbol> {
    auto [y1, y2] = multiclock_eval(first, second, clocks, in[0], in[1]);
    return static_cast<Symbol>(y1 * second_size + y2);
  };
  e.chi = RestrictionMap([](const CausalSignal& clocks) -> std::optional<ChiImage> {
    return multiclock_chi(clocks);
  });
  return e;
}

Alphabet address_alphabet() { return Alphabet{"A", "B", "-"}; }

Alphabet memory_control_alphabet() {
  return Alphabet::product(address_alphabet(), address_alphabet());
}

std::optional<ChiImage> abmem_chi(const CausalSignal& control) {
  const Symbol r = read_address(control.current());
  if (r == kNoAddress) {
    return std::nullopt;
  }
  for (std::size_t u = control.t().index + 1; u-- > 0;) {
    if (write_address(control[u]) == r) {
      return ChiImage({RefPoint{kD, Tick{u}}});
    }
  }
  return std::nullopt;
}

std::optional<Symbol> abmem_eval(const CausalSignal& control, const CausalSignal& input) {
  std::array<MemCell, 2> cells{MemCell{Address::A, {}}, MemCell{Address::B, {}}};
  for (std::size_t u = 0; u <= control.t().index; ++u) {
    const Symbol w = write_address(control[u]);
    if (w != kNoAddress) {
      cells[w].content = std::pair{input[u], Tick{u}};
    }
  }
  const Symbol r = read_address(control.current());
  if (r == kNoAddress || !cells[r].content) {
    return std::nullopt;
  }
  return cells[r].content->first;
}

CircuitElement make_abmem(Alphabet data) {
  auto data_ref = make_alphabet(std::move(data));
  CircuitElement e;
  e.name = "abmem";
  e.control_alphabet = make_alphabet(memory_control_alphabet());
  e.inputs = {{kD, data_ref}};
  e.output_alphabet = data_ref;
  e.eval = [](const CausalSignal& control, std::span<const CausalSignal> in) {
    return abmem_eval(control, in[0]);
  };
  e.chi = RestrictionMap(abmem_chi);
  return e;
}

}  // namespace causal
