extern void print_int(int v);

int g0 = 3;
int g1 = 5;
int g2 = 7;
int a[8] = {3, 6, 6, 9, 2, 3, 6, 8};

void bump(int d)
{
    g0 = g0 + d;
}

int h0(int u, int v)
{
    int t;
    t = 6;
    if (t > 1) {
        return t - (6 == g2);
    }
    return t + v;
}

int h1(int u, int v)
{
    int t;
    t = a[g1 & 7];
    if (t > 9) {
        return t - 1 - a[v & 7];
    }
    return t + v;
}

int h2(int u, int v)
{
    int t;
    t = 3;
    if (t > 0) {
        return t - a[v & 7];
    }
    return t + v;
}

int main(void)
{
    int x0, x1, x2, x3;
    int i0, i1, i2;
    x0 = 0;
    x1 = 6;
    x2 = 8;
    x3 = 4;
    for (i0 = 0; i0 < 3; i0++) {
        if (9 + g2 == 1) break;
        if (a[x3 & 7] ^ 0 == 1) break;
        print_int((a[x1 & 7] < 8));
        if (9 * 3 == 1) break;
    }
    bump(5 - a[g1 & 7]);
    i0 = 0;
    do {
        i1 = 0;
        do {
            x3++;
            x0 = h1(a[x3 & 7], (g2 == x3));
            x0 = a[x1 & 7];
            i1++;
        } while (i1 < 1);
        i0++;
    } while (i0 < 0);
    x0++;
    g0 = (g1 / (1 + ((a[g2 & 7]) & 3)) | x2);
    if (g1 % (1 + ((4) & 3)) > 4) {
        x3 = (9 / (1 + ((x3) & 3)) - a[x2 & 7]);
        if (1 + 7 != 5)
            g0 = (9 % (1 + ((g0) & 3)) | x0 + a[x0 & 7]);
        x2--;
        g0 = x2;
    } else {
        x3 = h2(4, a[g0 & 7]);
        a[g1 & 7] = 6 / (1 + ((g2) & 3));
    }
    i0 = 0;
    while (i0 < 3) {
        switch (3 * x3 & 3) {
        case 0:
            x3 = ((x2 < x2) | a[g2 & 7] * a[x1 & 7]);
            break;
        case 1:
            x3 = a[g1 & 7];
            break;
        default:
            bump(x2 + g2);
        }
        i0++;
    }
    for (i0 = 0; i0 < 0; i0++) {
        g1 = x0;
    }
    print_int(2);
    print_int(a[x3 & 7] / (1 + ((x0) & 3)));
    switch (g2 / (1 + ((0) & 3)) & 3) {
    case 0:
        x0 = (4 & g0);
        break;
    default:
        x3 = (x0 < (a[g0 & 7] == x3));
    }
    g2 = g0;
    if (a[g1 & 7] & g2 != 8) {
        g2 = ((x2 == x0) < x0 - g2);
        g1 = a[x2 & 7] | g1 / (1 + (((0 == g2)) & 3));
        x1 = g0 * a[x2 & 7] % (1 + ((3) & 3));
        a[x2 & 7] = g1 % (1 + ((a[g0 & 7]) & 3));
        x1 = a[x2 & 7];
    } else {
        print_int(7 % (1 + ((a[g0 & 7]) & 3)));
        for (i0 = 0; i0 < 2; i0++) {
            x3 = (x2 | a[g0 & 7] - a[x0 & 7] % (1 + ((3) & 3)));
            if (a[g2 & 7] - x2 == 0) continue;
        }
    }
    for (i0 = 0; i0 < 0; i0++) {
        g0 = g0;
        print_int(x1);
        g0 = ((g2 < x3) ^ 7 / (1 + ((6) & 3)));
        g1 = (a[x2 & 7] / (1 + ((x3) & 3)) - 9);
        if (g0 == 2) continue;
        a[x2 & 7] = a[g2 & 7] % (1 + ((9) & 3));
    }
    g2 = a[x0 & 7];
    g0 = (1 * 9 == x1 / (1 + ((x0) & 3)));
    i0 = 0;
    while (i0 < 2) {
        x0 = (a[x2 & 7] * x0 * g1);
        i0++;
    }
    g0 = x2;
    if (2 == 2) {
        if (9 * x2 > 8)
            bump((x3 < a[g0 & 7]));
        print_int((9 < a[x2 & 7]));
        x1 = (a[x2 & 7] ^ x3 == 0 ^ a[g0 & 7]);
    } else {
        g2 = (x2 + g2 + x2 ^ g2);
        x3 = a[g0 & 7];
    }
    i0 = 0;
    while (i0 < 0) {
        a[7 & 7] = 1;
        x1 = g0;
        i0++;
    }
    print_int(9 + a[g2 & 7]);
    i0 = 0;
    do {
        x3 = ((g2 == x2) == g2 | x2);
        a[a[g0 & 7] & 7] = (x0 < 5);
        if (g0 * x0 != 0) {
            g2 = ((3 == a[x1 & 7]) == x2 | 7);
        }
        x2 = (x0 ^ 4 < x3 / (1 + ((x3) & 3)));
        g2 = (a[x0 & 7] * 3 == x0);
        i0++;
    } while (i0 < 2);
    if (7 ^ 5 > 1) {
        i0 = 0;
        do {
            a[1 & 7] = g1 % (1 + ((x0) & 3));
            for (i1 = 0; i1 < 1; i1++) {
                print_int(7 & 4);
                x1 = (1 ^ 3 ^ x0);
            }
            g0 = (x0 % (1 + ((g0) & 3)) - a[x3 & 7] | a[g0 & 7]);
            i0++;
        } while (i0 < 1);
    }
    a[2 & 7] = a[x2 & 7];
    i0 = 0;
    do {
        x3 = (a[x2 & 7] + a[g1 & 7] * 9 + x1);
        i0++;
    } while (i0 < 3);
    for (i0 = 0; i0 < 1; i0++) {
        x2 = 1;
        x1 = (x3 < x1 | 5);
        if (a[x0 & 7] == 2) continue;
    }
    a[5 & 7] = x3 - x0;
    x1 = 6;
    if (5 < 7)
        x3 = g2 ^ 9 / (1 + (((9 == a[x1 & 7])) & 3));
    a[a[g0 & 7] & 7] = a[x1 & 7] - g0;
    print_int(x0);
    i0 = 0;
    do {
        g0 = 1 % (1 + ((a[g0 & 7] - 1) & 3));
        if (a[g1 & 7] == 2) break;
        if (x2 == 0) break;
        i0++;
    } while (i0 < 3);
    for (i0 = 0; i0 < 3; i0++) {
        x2 = (1 % (1 + ((5) & 3)) & g2);
        i1 = 0;
        do {
            x1++;
            i1++;
        } while (i1 < 1);
    }
    x1++;
    x0 = x1;
    x3--;
    x1 = (a[x1 & 7] & a[g0 & 7]);
    x0--;
    x3++;
    if (1 % (1 + ((a[x1 & 7]) & 3)) != 8) {
        g1 = a[x0 & 7];
        i0 = 0;
        do {
            x0 = a[x0 & 7];
            i0++;
        } while (i0 < 2);
        x3 = (x0 * 9 % (1 + ((a[x2 & 7]) & 3)));
    } else {
        x0 = 7;
        x1 = x2 % (1 + ((x1) & 3));
    }
    if (g2 < 4) {
        x3 = g0;
        for (i0 = 0; i0 < 1; i0++) {
            x3 = (7 - x0 - 5 / (1 + ((3) & 3)));
        }
        x0 = (x3 == (g2 < g1));
    } else {
        x0 = (a[x3 & 7] + 5 * (x1 < x2));
        x3 = (a[g1 & 7] & x3);
        bump(g0);
        x1 = (a[x2 & 7] | 4);
    }
    i0 = 0;
    while (i0 < 2) {
        print_int((a[x0 & 7] == a[x3 & 7]));
        i1 = 0;
        while (i1 < 1) {
            x3 = g2;
            x1 = x1;
            i1++;
        }
        i0++;
    }
    print_int(a[x1 & 7] - x1);
    g1 = (g1 ^ x1);
    i0 = 0;
    do {
        switch ((g0 == g1) & 3) {
        case 0:
            print_int((g0 == a[g2 & 7]));
            break;
        default:
            x2 = ((4 < g2) | g0 | g1);
        }
        x3--;
        x1 = 8 % (1 + ((g0) & 3)) / (1 + ((a[x2 & 7] ^ g2) & 3));
        x2 = x0 | a[g0 & 7] % (1 + ((a[x1 & 7] * a[x0 & 7]) & 3));
        i0++;
    } while (i0 < 0);
    a[x3 & 7] = g2 ^ a[g2 & 7];
    x3 = h1(x3 ^ g1, (8 < x1));
    if (9 * g1 < 5) {
        x3 = a[x2 & 7];
        x0 = h2(x2, a[x0 & 7] ^ a[g0 & 7]);
    } else {
        a[a[x1 & 7] & 7] = 8;
        x0 = (a[x1 & 7] ^ g0 ^ (6 == g2));
        a[a[g0 & 7] & 7] = 3 % (1 + ((x2) & 3));
    }
    bump(x3 & a[g2 & 7]);
    i0 = 0;
    while (i0 < 1) {
        if (a[g2 & 7] | g2 < 2) {
            print_int(a[x1 & 7]);
            a[6 & 7] = (x1 == 1);
        } else {
            a[x2 & 7] = (x2 < 1);
        }
        i0++;
    }
    x2 = a[x3 & 7];
    g0 = g1 ^ g0 / (1 + ((x3 / (1 + ((5) & 3))) & 3));
    if (g2 ^ x2 == 8) {
        i0 = 0;
        do {
            g0 = 7;
            if ((a[x3 & 7] < 4) == 1) break;
            i0++;
        } while (i0 < 3);
    }
    for (i0 = 0; i0 < 2; i0++) {
        if ((x3 < a[g0 & 7]) == 1) break;
        if (8 % (1 + ((x0) & 3)) == 1) break;
    }
    i0 = 0;
    while (i0 < 2) {
        x1 = g1 % (1 + ((x2 & 8) & 3));
        x1 = h1(3 * 6, x2 / (1 + ((a[x2 & 7]) & 3)));
        bump(1);
        x3++;
        i0++;
    }
    x0 = (a[g0 & 7] % (1 + ((9) & 3)) == (a[g1 & 7] < x3));
    x1 = h2(x1 % (1 + ((x0) & 3)), 6 / (1 + ((x1) & 3)));
    for (i0 = 0; i0 < 2; i0++) {
        print_int(g2);
        x1 = (g1 ^ 3 * x0);
    }
    bump(g1 + 0);
    x3--;
    for (i0 = 0; i0 < 3; i0++) {
        x0 = g1;
    }
    for (i0 = 0; i0 < 3; i0++) {
        g0 = a[x0 & 7];
    }
    x3 = h0(0, (1 == 2));
    x0 = (a[x1 & 7] % (1 + ((4) & 3)) == 4);
    x0 = g2;
    x0 = (x2 ^ g2 & a[x1 & 7] + g2);
    x1 = a[x3 & 7] ^ 5 / (1 + (((a[g2 & 7] == 0)) & 3));
    a[g1 & 7] = g1;
    i0 = 0;
    while (i0 < 2) {
        switch (x3 | 2 & 3) {
        case 0:
            bump(a[g1 & 7] - 2);
        default:
            x1--;
        }
        x1++;
        i0++;
    }
    if (g2 < 7) {
        print_int(x3 + x0);
        g2 = x1;
        g0 = a[g2 & 7] % (1 + ((0 & 0) & 3));
        i0 = 0;
        while (i0 < 3) {
            x0 = 4;
            i0++;
        }
    }
    x2 = g1;
    if (a[g2 & 7] > 7) {
        x1 = x1;
        g0 = (a[x3 & 7] | 4 < 9);
        x0 = g0;
    }
    g0 = (g1 | 4 ^ 4 - 8);
    g0 = (a[x0 & 7] < 1 % (1 + ((a[g1 & 7]) & 3)));
    i0 = 0;
    while (i0 < 3) {
        if (0 ^ x3 != 4) {
            switch (x0 % (1 + ((g2) & 3)) & 3) {
            case 0:
                x3 = x3 % (1 + ((a[x1 & 7]) & 3));
            default:
                x2 = 5;
            }
            x2 = (9 == 4 - a[x3 & 7]);
        } else {
            g1 = (x1 | x3 + x0);
        }
        i0++;
    }
    x1--;
    if ((6 < a[x3 & 7]) != 0) {
        a[x1 & 7] = x3;
        switch (g0 / (1 + ((x1) & 3)) & 3) {
        case 0:
            a[x3 & 7] = x3 % (1 + ((4) & 3));
        case 1:
            print_int(g0 | a[x3 & 7]);
            break;
        case 2:
            x0 = a[x0 & 7];
            break;
        default:
            x2 = (4 * g2 | x1);
        }
    } else {
        a[g2 & 7] = (a[g0 & 7] == g0);
        a[g0 & 7] = a[x1 & 7];
        x2 = g1 % (1 + ((a[x0 & 7]) & 3)) / (1 + ((8 / (1 + ((9) & 3))) & 3));
        x1--;
    }
    if (6 == 5) {
        if (g2 > 5) {
            bump(x0);
            x1 = g0 ^ 9 % (1 + ((a[g0 & 7] + g0) & 3));
        }
    }
    i0 = 0;
    while (i0 < 3) {
        g1 = x0 % (1 + (((7 < x2)) & 3));
        if (a[g2 & 7] != 7) {
            if (a[x3 & 7] == 0) break;
            g1 = (a[x0 & 7] % (1 + ((g2) & 3)) - x1 | g0);
        }
        print_int(9 ^ g1);
        g2 = (g2 % (1 + ((a[x2 & 7]) & 3)) - 1 ^ g2);
        i0++;
    }
    i0 = 0;
    while (i0 < 0) {
        i1 = 0;
        do {
            if (a[g0 & 7] == 7)
                a[a[x1 & 7] & 7] = 4 + x3;
            g2 = x3;
            x3++;
            i1++;
        } while (i1 < 2);
        i0++;
    }
    i0 = 0;
    while (i0 < 0) {
        i1 = 0;
        while (i1 < 1) {
            x3 = x2;
            i1++;
        }
        print_int(x0 / (1 + ((a[x3 & 7]) & 3)));
        g1 = g0;
        i0++;
    }
    switch (a[x0 & 7] | x3 & 3) {
    case 0:
        a[g0 & 7] = 5 % (1 + ((x1) & 3));
        break;
    case 1:
        print_int(a[x2 & 7] & x0);
        break;
    case 2:
        g1 = (x3 == x2);
        break;
    default:
        a[x1 & 7] = 7 - a[g1 & 7];
    }
    i0 = 0;
    do {
        i1 = 0;
        do {
            x3 = 7;
            x0 = (a[x2 & 7] - g0 ^ g1 ^ 8);
            i1++;
        } while (i1 < 3);
        if (g2 - 8 == 1) break;
        i0++;
    } while (i0 < 2);
    a[a[x3 & 7] & 7] = 1;
    switch (g0 & 3) {
    case 0:
        x0 = (a[g1 & 7] < x1 % (1 + ((a[g2 & 7]) & 3)));
        print_int(a[g0 & 7] + g0);
    default:
        print_int(g1);
    }
    a[6 & 7] = 1;
    x1 = (x0 + g0 ^ (x1 == a[x3 & 7]));
    i0 = 0;
    do {
        if (x1 + g2 == 1) break;
        g2 = ((a[x3 & 7] == x2) & g2 + g0);
        if (g0 * 4 == 0) break;
        g0 = a[g1 & 7];
        print_int(0 + g1);
        i0++;
    } while (i0 < 3);
    i0 = 0;
    do {
        g2 = (0 - a[g0 & 7] * 9);
        x2 = (x3 * a[g1 & 7]);
        i0++;
    } while (i0 < 3);
    x2 = 3;
    g0 = (x3 | a[g2 & 7] | 0);
    g0 = ((8 == x3) * (g0 == a[g0 & 7]));
    if (7 - a[x2 & 7] == 4) {
        if (4 - a[g2 & 7] < 1) {
            a[a[g2 & 7] & 7] = a[x2 & 7];
            a[x2 & 7] = (a[x1 & 7] == 3);
        }
    }
    i0 = 0;
    do {
        g0 = a[x3 & 7];
        if (g1 - a[g1 & 7] == 2) break;
        i0++;
    } while (i0 < 2);
    i0 = 0;
    while (i0 < 3) {
        if (x1 == 2) break;
        print_int(a[x3 & 7] * 3);
        i0++;
    }
    g0 = (x1 ^ x0);
    g2 = 7 % (1 + (((3 == 9)) & 3));
    print_int(8);
    x3 = x3;
    switch (g0 & 3) {
    case 0:
        a[x1 & 7] = x3;
        x2 = h1(a[x2 & 7], a[x0 & 7] / (1 + ((x0) & 3)));
    case 1:
        x3 = ((a[x0 & 7] == g1) < a[x2 & 7]);
        break;
    case 2:
        bump(6);
        break;
    default:
        x2 = (x0 * a[x3 & 7]);
    }
    i0 = 0;
    while (i0 < 2) {
        x3 = a[g1 & 7];
        print_int(x1 - 4);
        g1 = x2;
        i0++;
    }
    switch (g1 & 9 & 3) {
    case 0:
        a[g0 & 7] = (g2 < g1);
        break;
    default:
        g0 = (x3 + x2 ^ x0);
    }
    i0 = 0;
    do {
        x2 = h1(g1 - 5, (g2 < g1));
        g2 = (a[g0 & 7] < 1);
        if (9 & a[g2 & 7] != 0) {
            x0 = h2(a[g2 & 7], a[x3 & 7] / (1 + ((6) & 3)));
            x3 = a[x1 & 7];
            print_int(x2 % (1 + ((x3) & 3)));
        }
        i0++;
    } while (i0 < 2);
    g1 = (8 < a[g1 & 7]);
    for (i0 = 0; i0 < 0; i0++) {
        x2 = 0;
        i1 = 0;
        while (i1 < 3) {
            if (8 != 0) {
                x2 = ((g2 == a[x0 & 7]) & 9 * g1);
                x2 = h1(7 + x1, 7 + x1);
            }
            x3--;
            i1++;
        }
    }
    i0 = 0;
    while (i0 < 2) {
        x0--;
        switch (9 & 3) {
        case 0:
            x1 = (a[x0 & 7] & x3);
            break;
        case 1:
            x3 = (x1 == 3 & x2);
        case 2:
            g2 = a[x2 & 7];
            break;
        default:
            x3 = h0(a[x2 & 7] - x3, a[x1 & 7] - 6);
        }
        i0++;
    }
    a[6 & 7] = g2 & a[x2 & 7];
    i0 = 0;
    while (i0 < 1) {
        x3 = (g1 & g2 + g2);
        x3 = (x2 + a[x1 & 7] * 7 / (1 + ((a[g1 & 7]) & 3)));
        g1 = a[x0 & 7] % (1 + ((g1 + g2) & 3));
        x1 = (5 == g2 | x0);
        x1 = g2;
        bump((0 == 5));
        i0++;
    }
    bump(3 ^ x3);
    if (x1 != 1) {
        if (4 != 7) {
            g2 = (g1 - a[x3 & 7]);
        } else {
            g2 = ((x3 == g0) + 4 + 6);
        }
    }
    i0 = 0;
    while (i0 < 0) {
        if (a[g2 & 7] == 2) break;
        g0 = (8 + (4 < 7));
        i0++;
    }
    print_int(2 + a[g1 & 7]);
    a[a[x0 & 7] & 7] = x0 & a[x0 & 7];
    g0 = 4;
    if (x3 > 0)
        a[8 & 7] = (a[g2 & 7] == g0);
    i0 = 0;
    do {
        x3++;
        bump((g1 == x2));
        x1 = h0((g2 < g2), a[x2 & 7] + g2);
        x1 = (5 & 4);
        i0++;
    } while (i0 < 1);
    bump(3 & g0);
    x2 = 1 % (1 + ((0 ^ g2) & 3));
    i0 = 0;
    while (i0 < 3) {
        i1 = 0;
        do {
            i2 = 0;
            do {
                x0++;
                x1 = (1 & g2 + 1);
                i2++;
            } while (i2 < 1);
            i1++;
        } while (i1 < 3);
        i0++;
    }
    i0 = 0;
    while (i0 < 1) {
        x3--;
        x3 = h0(g2 % (1 + ((0) & 3)), g0);
        x3 = (x3 + g2 - a[g1 & 7]);
        x0--;
        i0++;
    }
    x3--;
    g2 = a[x3 & 7];
    if (x1 < 2) {
        switch (x2 + a[x0 & 7] & 3) {
        case 0:
            x3 = x1 / (1 + ((1 + 2) & 3));
            break;
        case 1:
            x2 = h2(g1 * 9, g1);
        case 2:
            g2 = (6 % (1 + ((4) & 3)) + (x1 == 6));
            break;
        default:
            x1 = (x0 == a[x1 & 7]);
        }
        x2 = x1;
    } else {
        g1 = x3;
        print_int(a[g0 & 7] + 9);
    }
    switch (5 & 3) {
    case 0:
        x3 = (a[g2 & 7] / (1 + ((x3) & 3)) == 8 % (1 + ((a[g0 & 7]) & 3)));
        g0 = ((a[g0 & 7] < g2) - 8 & a[x0 & 7]);
    default:
        x2 = (x0 / (1 + ((a[x2 & 7]) & 3)) | 0 % (1 + ((x1) & 3)));
    }
    for (i0 = 0; i0 < 3; i0++) {
        print_int(a[g1 & 7] ^ g2);
        g2 = (x0 * 3 < a[x2 & 7]);
    }
    i0 = 0;
    do {
        print_int(g0 | x2);
        x1 = x0;
        print_int(a[g2 & 7] % (1 + ((a[g0 & 7]) & 3)));
        x2++;
        i0++;
    } while (i0 < 3);
    x1 = g2;
    switch ((g1 < 8) & 3) {
    case 0:
        g2 = 5;
        print_int(g1);
        break;
    case 1:
        x3 = (x0 < g2 * 7);
        break;
    default:
        bump(a[x2 & 7] * 2);
    }
    switch (9 & 3) {
    case 0:
        print_int(a[x0 & 7]);
    case 1:
        g0 = ((g0 < x3) == 6 + 3);
        break;
    default:
        print_int(1 % (1 + ((x2) & 3)));
    }
    bump(x2);
    x0 = (a[x1 & 7] < 6 + 1);
    print_int(x3 + x2);
    x3 = (a[x1 & 7] + x2 < (x3 == g0));
    switch (5 * g1 & 3) {
    case 0:
        x1 = x3;
        x0 = (2 - a[g0 & 7] * 6);
        break;
    case 1:
        print_int(x2);
        break;
    case 2:
        print_int(a[g1 & 7]);
        break;
    default:
        x0 = (a[g0 & 7] | g2 | g0 + x3);
    }
    x3++;
    i0 = 0;
    while (i0 < 2) {
        if (2 == 1)
            x2++;
        x3 = x2;
        x2 = (g1 / (1 + ((x2) & 3)) ^ x1 | a[g1 & 7]);
        x1 = h1(a[x0 & 7], x2);
        print_int(a[g1 & 7] + 5);
        i0++;
    }
    print_int(a[x2 & 7] | a[g1 & 7]);
    bump(x0);
    x0 = (g2 * x0 ^ 6);
    if (6 % (1 + ((g2) & 3)) < 9) {
        x1 = (a[x2 & 7] ^ g2 < 0);
        if (x0 == 1) {
            g2 = a[x3 & 7];
        } else {
            x3 = (x0 & 4 - g0);
        }
    } else {
        x3 = x3 | g0 / (1 + (((a[x1 & 7] == 5)) & 3));
        i0 = 0;
        while (i0 < 3) {
            x0 = (x1 - 3 + 9);
            i0++;
        }
    }
    x0++;
    i0 = 0;
    while (i0 < 3) {
        x1 = (3 - g0 * a[g2 & 7] & a[x0 & 7]);
        i1 = 0;
        while (i1 < 3) {
            x2 = (8 & a[x3 & 7] == a[x3 & 7] | g1);
            i1++;
        }
        x0 = h0((g1 < 9), x2 | g2);
        if (a[x0 & 7] + a[x1 & 7] == 2) break;
        i0++;
    }
    print_int(x2);
    x3++;
    i0 = 0;
    do {
        x3 = g0;
        print_int(x0 + 2);
        i0++;
    } while (i0 < 2);
    g0 = g2;
    g1 = x3;
    g0 = 9 & x1 % (1 + ((9 | x2) & 3));
    i0 = 0;
    while (i0 < 1) {
        g1 = (9 % (1 + ((5) & 3)) | a[g1 & 7] ^ 0);
        i0++;
    }
    for (i0 = 0; i0 < 0; i0++) {
        if (4 - 1 == 2) continue;
        x2 = h2(g1, a[x2 & 7] / (1 + ((x0) & 3)));
    }
    a[g1 & 7] = a[g2 & 7];
    x0 = x1 % (1 + (((7 < g2)) & 3));
    if (a[g0 & 7] > 4) {
        i0 = 0;
        while (i0 < 3) {
            print_int(a[x0 & 7] & a[x2 & 7]);
            g0 = (8 - x0);
            i0++;
        }
    } else {
        i0 = 0;
        while (i0 < 3) {
            g1 = (6 * g0 | g1);
            a[g2 & 7] = 9;
            g0 = (a[g2 & 7] % (1 + ((7) & 3)) - x0);
            i0++;
        }
    }
    x0 = 7 / (1 + ((1 % (1 + ((9) & 3))) & 3));
    x0--;
    return (x0 + x1) & 255;
}
