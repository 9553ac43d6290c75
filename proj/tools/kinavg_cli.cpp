// placeholder main; subcommands land once the runner exists
#include <cstdio>

int main() {
    std::puts("kinavg: runner not wired yet");
    return 1;
}
