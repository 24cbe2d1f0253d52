"""Walks one small program through the whole pipeline.

    python3 demos/walkthrough.py

Translates a loop with a break, runs the source and the translation,
reports how long the MSVL interval was, and compares final states.
"""
from c2m.equivalence import differential_run, snapshot_view
from c2m.msvl import emit

SOURCE = """\
int total;
int main(void)
{
    int i;
    total = 0;
    for (i = 0; i < 10; i++) {
        if (i == 4)
            break;
        total = total + i;
    }
    return total;
}
"""


def main():
    v = differential_run(SOURCE)
    print(emit(v.msvl_program))
    print("Xd-C :", v.xdc.status, v.xdc.exit_code, snapshot_view(v.xdc.snapshot))
    print("MSVL :", v.msvl.status, v.msvl.exit_code,
          f"{v.msvl.interval.length} states")
    print("alpha:", v.alpha.table)
    print("verdict:", v.status, v.survivors or "")


if __name__ == "__main__":
    main()
