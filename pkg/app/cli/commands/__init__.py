from . import solve, iterate, diagnose, grs, positional_power, convert_digraph, compare

# Registration order is the order of the help listing
COMMANDS = [solve, iterate, diagnose, grs, positional_power, convert_digraph, compare]
