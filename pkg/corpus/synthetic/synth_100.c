extern void print_int(int v);

int g0 = 2;
int g1 = 7;
int g2 = 7;
int a[8] = {2, 6, 5, 6, 8, 1, 8, 1};

void bump(int d)
{
    g0 = g0 + d;
}

int h0(int u, int v)
{
    int t;
    t = 0;
    if (t > 5) {
        return t - 3 & g2;
    }
    return t + v;
}

int h1(int u, int v)
{
    int t;
    t = a[g2 & 7];
    if (t > 8) {
        return t - a[g1 & 7] / (1 + ((u) & 3));
    }
    return t + v;
}

int h2(int u, int v)
{
    int t;
    t = ((g0 < v) & a[g1 & 7]);
    if (t > 14) {
        return t - g1;
    }
    return t + v;
}

int main(void)
{
    int x0, x1, x2, x3;
    int i0, i1, i2;
    x0 = 6;
    x1 = 2;
    x2 = 9;
    x3 = 8;
    i0 = 0;
    while (i0 < 1) {
        if (4 / (1 + ((5) & 3)) == 2) break;
        i0++;
    }
    bump((x0 < a[g1 & 7]));
    x1 = (8 | a[g0 & 7] * 5);
    g2 = 0;
    i0 = 0;
    while (i0 < 1) {
        if (0 > 3) {
            if (1 - 8 == 1) break;
            x3 = (2 * (7 == a[x0 & 7]));
        } else {
            x1 = (g1 & 7 / (1 + ((7) & 3)));
        }
        if ((x1 < a[g2 & 7]) == 0) break;
        i0++;
    }
    switch (a[g2 & 7] & 3) {
    case 0:
        x1 = x2;
        x2 = (g2 + x0 | 3);
    case 1:
        a[x3 & 7] = a[x0 & 7];
        break;
    default:
        a[a[g0 & 7] & 7] = a[x0 & 7];
    }
    if (g1 & a[x2 & 7] < 0) {
        g1 = x3;
        x3++;
        x1 = (a[x0 & 7] < 2) % (1 + ((1 - 2) & 3));
        if (2 / (1 + ((g2) & 3)) > 2)
            x3 = ((x0 < x3) - x0);
        a[6 & 7] = (7 == a[x0 & 7]);
    } else {
        x0 = h0(x3 / (1 + ((x0) & 3)), g0 * 1);
    }
    g0 = 1 - x2 % (1 + (((x2 == a[g1 & 7])) & 3));
    x2 = g2;
    if ((x1 == 5) != 9) {
        x1 = (x1 == x0);
        switch (7 & 3) {
        case 0:
            g2 = (x3 * x3 | x2);
            break;
        case 1:
            x3 = (x0 / (1 + ((3) & 3)) ^ 1);
            break;
        case 2:
            print_int((a[g0 & 7] == x0));
        default:
            x2 = (a[x2 & 7] | g1 < 9 / (1 + ((4) & 3)));
        }
    } else {
        for (i0 = 0; i0 < 1; i0++) {
            x0 = g2;
        }
        g2 = (a[x3 & 7] | 9 ^ 1 * 9);
        x1 = (a[x0 & 7] < a[g1 & 7] | a[g2 & 7]);
    }
    switch ((8 == 0) & 3) {
    case 0:
        x1 = a[g0 & 7];
        g0 = 2;
    case 1:
        x3 = h0(3, 1 | x0);
        break;
    case 2:
        print_int(3 / (1 + ((a[x3 & 7]) & 3)));
    default:
        x3 = a[x2 & 7];
    }
    x0++;
    x0++;
    g2 = a[g2 & 7] | x2 / (1 + ((x3 - 7) & 3));
    if (a[x0 & 7] == 8) {
        g0 = (x3 < x1);
        x2 = (9 < x2 - x2);
    } else {
        i0 = 0;
        while (i0 < 3) {
            x3 = 9;
            if ((x3 < g2) == 1) break;
            i0++;
        }
    }
    if (3 ^ a[g2 & 7] > 9) {
        x0 = g2;
        print_int(a[g2 & 7] ^ a[g2 & 7]);
    } else {
        a[5 & 7] = x2;
        print_int((3 < x1));
        print_int(g1 & g1);
    }
    if (0 * 6 == 9) {
        x2 = a[g1 & 7] ^ 9 / (1 + ((x3) & 3));
        x3--;
    } else {
        x0++;
        g1 = 3;
        x0 = 9 - x3 % (1 + ((7) & 3));
    }
    g0 = ((2 == g1) - 0 / (1 + ((8) & 3)));
    x2 = h0(1 ^ g0, a[x1 & 7]);
    for (i0 = 0; i0 < 3; i0++) {
        g1 = ((8 == x2) == a[g2 & 7]);
    }
    print_int(a[g1 & 7] / (1 + ((x0) & 3)));
    x0++;
    x1 = x3 % (1 + ((g1) & 3)) / (1 + ((x1) & 3));
    g0 = a[g2 & 7];
    if ((7 == 4) < 4) {
        switch (3 & 3) {
        case 0:
            x2++;
            a[g1 & 7] = 5 | x2;
            break;
        default:
            g2 = 6 ^ x0 / (1 + ((8 / (1 + ((g2) & 3))) & 3));
        }
        bump(1 / (1 + ((5) & 3)));
        x2 = (0 & g1 < g1 * g2);
    } else {
        g0 = (g2 & 5 == g2);
        x2 = h0(x0 * g1, (a[g0 & 7] == 1));
    }
    g1 = (4 % (1 + ((a[x1 & 7]) & 3)) == a[g1 & 7]);
    i0 = 0;
    do {
        g0 = a[g2 & 7] % (1 + ((x1 & 4) & 3));
        x2 = (x2 % (1 + ((g1) & 3)) ^ 5 & x0);
        i1 = 0;
        do {
            x1 = ((a[x0 & 7] < g0) * (8 == g1));
            x3++;
            i1++;
        } while (i1 < 0);
        i0++;
    } while (i0 < 1);
    if ((a[g1 & 7] < x2) != 1) {
        x2 = g2 % (1 + ((2) & 3));
    } else {
        i0 = 0;
        do {
            x3 = a[g2 & 7];
            g1 = (9 / (1 + ((g0) & 3)) * 0);
            i0++;
        } while (i0 < 1);
    }
    for (i0 = 0; i0 < 0; i0++) {
        x0 = (7 ^ a[x3 & 7] | x2);
        g1 = (a[g0 & 7] - g1 | 1 * x3);
        x2 = g2;
        bump(a[g1 & 7] / (1 + ((3) & 3)));
        x2++;
    }
    x3 = h1(9 * 0, x1 ^ 0);
    g1 = a[g1 & 7];
    x1 = (x2 - x1 + 4 * x3);
    i0 = 0;
    do {
        x1 = (a[x2 & 7] & a[g2 & 7] == x3 % (1 + ((x0) & 3)));
        if (3 * 2 == 1) break;
        x2++;
        x0 = (a[g2 & 7] / (1 + ((5) & 3)) < 6);
        g1 = (x0 * g1 + x0);
        i0++;
    } while (i0 < 0);
    switch (g1 - a[x1 & 7] & 3) {
    case 0:
        x1 = h1(a[x1 & 7], a[x0 & 7]);
        break;
    case 1:
        x3++;
        break;
    case 2:
        x2 = (a[x1 & 7] | x2 | 0);
        break;
    default:
        bump(x2);
    }
    x3 = x1 % (1 + ((2) & 3));
    g0 = 1;
    x3++;
    for (i0 = 0; i0 < 1; i0++) {
        x1 = 1;
        if (x2 > 9) {
            x0 = h1(8, x0);
            x0 = a[g1 & 7];
        }
    }
    if (x2 & x0 < 6) {
        x0 = (3 % (1 + ((a[g1 & 7]) & 3)) == (9 < x1));
        for (i0 = 0; i0 < 2; i0++) {
            x0 = (a[x1 & 7] ^ x0 ^ x0);
            if (a[x1 & 7] == 1) continue;
        }
        x2--;
    }
    g0 = g2;
    if (g1 < 0) {
        for (i0 = 0; i0 < 0; i0++) {
            x1 = a[x1 & 7] | 3 / (1 + ((a[x1 & 7] ^ a[g2 & 7]) & 3));
            print_int(6 ^ x2);
            a[2 & 7] = a[g0 & 7] | 3;
        }
        print_int(g2 * g1);
    } else {
        x3++;
        bump(9);
        x1 = (g0 | 1 / (1 + ((a[g1 & 7]) & 3)));
        x2 = x1;
    }
    a[0 & 7] = x3 & 4;
    i0 = 0;
    do {
        x0 = (x3 / (1 + ((8) & 3)) & a[x0 & 7] | x1);
        i0++;
    } while (i0 < 3);
    i0 = 0;
    do {
        x0 = (x1 ^ x3 & g0 | x1);
        for (i1 = 0; i1 < 0; i1++) {
            x3 = (x2 % (1 + ((x3) & 3)) + x2);
            x2 = 8;
            g2 = 3 % (1 + ((7 - a[x0 & 7]) & 3));
        }
        i0++;
    } while (i0 < 0);
    g0 = (0 == (g1 == a[x1 & 7]));
    x1 = g2;
    i0 = 0;
    do {
        i1 = 0;
        while (i1 < 0) {
            g1 = g1;
            i1++;
        }
        x0 = g1 * a[g2 & 7] % (1 + ((x2) & 3));
        i0++;
    } while (i0 < 3);
    switch (a[g2 & 7] * a[g2 & 7] & 3) {
    case 0:
        bump((a[g0 & 7] == x0));
        g0 = a[g0 & 7] & g1 / (1 + (((1 < x1)) & 3));
        a[6 & 7] = (a[x3 & 7] < g1);
    default:
        print_int(x2);
    }
    g2 = g1 / (1 + ((g2 - a[x1 & 7]) & 3));
    x3 = g1;
    i0 = 0;
    do {
        x1 = (5 - 3);
        g1 = (a[g1 & 7] / (1 + ((6) & 3)) * a[g1 & 7]);
        g1 = (9 - x1 + (a[g2 & 7] == 5));
        i0++;
    } while (i0 < 0);
    x2 = h1(a[x1 & 7] ^ a[g1 & 7], a[g0 & 7] ^ 0);
    x0 = 0 % (1 + ((2 / (1 + ((x3) & 3))) & 3));
    a[x3 & 7] = a[x3 & 7] ^ g2;
    x1 = (5 % (1 + ((6) & 3)) - (x1 < a[x3 & 7]));
    x0 = (6 * 9 & x0 % (1 + ((x1) & 3)));
    x2 = (x2 ^ x2 & a[x2 & 7]);
    i0 = 0;
    do {
        if (x2 / (1 + ((a[x0 & 7]) & 3)) > 2) {
            if (6 & x3 == 0) {
                g0 = (x2 | (4 < 7));
            } else {
                x2 = (x0 & 1 | x2);
            }
        }
        g1 = a[x2 & 7] % (1 + ((a[x2 & 7]) & 3));
        print_int(2);
        i0++;
    } while (i0 < 3);
    bump(x0 + 1);
    x2 = (g0 | 0 | a[x1 & 7]);
    x2--;
    print_int(a[x1 & 7] / (1 + ((x3) & 3)));
    switch (a[x1 & 7] * a[g1 & 7] & 3) {
    case 0:
        x3 = (x3 - 8 | g0);
        bump(g2 - g2);
        break;
    default:
        x3 = (x3 ^ 7 * 8 % (1 + ((x1) & 3)));
    }
    i0 = 0;
    do {
        g1 = (a[x2 & 7] - g0 + 0 | a[x3 & 7]);
        print_int(a[g1 & 7]);
        i0++;
    } while (i0 < 2);
    i0 = 0;
    while (i0 < 0) {
        x2 = (x0 * 8 & g0);
        i1 = 0;
        while (i1 < 3) {
            x2 = a[x2 & 7];
            a[0 & 7] = x3 ^ a[x2 & 7];
            i1++;
        }
        i0++;
    }
    x3 = h2(6 | 7, g0 + 8);
    x2--;
    x1 = h1(a[x3 & 7] & x1, a[g1 & 7]);
    bump(g0);
    switch (3 ^ g0 & 3) {
    case 0:
        x3 = 9;
        x2 = a[x1 & 7];
    case 1:
        x3 = (x0 == g2 * x3);
        break;
    case 2:
        print_int(g2 ^ x2);
        break;
    default:
        x2 = a[x1 & 7];
    }
    if (9 ^ a[x3 & 7] > 9) {
        if (g0 | a[x2 & 7] != 3) {
            x2 = 2;
            g2 = a[x0 & 7];
        }
        a[g0 & 7] = g1 ^ g0;
    }
    a[0 & 7] = 9;
    switch (x2 + a[g2 & 7] & 3) {
    case 0:
        x2 = x2;
        x2--;
        break;
    case 1:
        print_int(1 - a[g1 & 7]);
        break;
    default:
        x1 = x2 + g1 / (1 + ((g0 % (1 + ((x0) & 3))) & 3));
    }
    if (x0 < 2) {
        switch (x1 & 3) {
        case 0:
            x2++;
        case 1:
            g1 = (g2 == x3 % (1 + ((g2) & 3)));
            break;
        default:
            print_int(x1 / (1 + ((a[x2 & 7]) & 3)));
        }
    }
    i0 = 0;
    do {
        x0 = (x1 & g2 * a[x2 & 7] + g0);
        if (5 == 2) break;
        bump(a[g0 & 7]);
        i0++;
    } while (i0 < 1);
    bump(7 * 9);
    g1 = a[x2 & 7];
    x1 = (g2 == 8 / (1 + ((g0) & 3)));
    if (g2 == 0) {
        if (a[g2 & 7] != 5) {
            i0 = 0;
            while (i0 < 2) {
                g1 = (g1 + a[x2 & 7] < (a[g2 & 7] == 0));
                i0++;
            }
        }
    } else {
        g2 = g0;
    }
    x0 = h2(9, g0 * x0);
    g1 = a[x2 & 7];
    x3 = x1;
    i0 = 0;
    do {
        for (i1 = 0; i1 < 2; i1++) {
            g1 = ((a[g1 & 7] == a[x0 & 7]) & a[g1 & 7] / (1 + ((x1) & 3)));
            x2 = h1(a[g0 & 7] * a[x2 & 7], 9 & g2);
            x3 = (7 + g2 - a[x2 & 7]);
        }
        print_int(x2);
        i0++;
    } while (i0 < 0);
    if (x1 * 7 == 2) {
        x2 = x3 - a[g1 & 7] % (1 + (((a[x0 & 7] == a[g2 & 7])) & 3));
        x0 = (8 ^ g1 - (g1 == g1));
    }
    i0 = 0;
    do {
        g1 = (a[g0 & 7] % (1 + ((1) & 3)) - a[x1 & 7] + 7);
        i0++;
    } while (i0 < 0);
    if (4 != 5)
        g1 = g0;
    g1 = (a[g1 & 7] + g1);
    g1 = a[x2 & 7];
    x1 = (a[g1 & 7] < x2 - x2);
    a[a[g2 & 7] & 7] = (g0 == x2);
    switch (x0 & 7 & 3) {
    case 0:
        a[g1 & 7] = 9 + a[g1 & 7];
        bump(g2 / (1 + ((x2) & 3)));
    case 1:
        bump(x3 * 9);
    default:
        a[g0 & 7] = 3 ^ x1;
    }
    a[x0 & 7] = x0 + a[x1 & 7];
    if (g1 / (1 + ((a[g1 & 7]) & 3)) == 5) {
        i0 = 0;
        do {
            x3 = g1;
            a[g0 & 7] = a[x0 & 7] + a[g1 & 7];
            i0++;
        } while (i0 < 3);
    } else {
        x1++;
    }
    g2 = (4 - 6 + (a[x2 & 7] == g2));
    g2 = x0;
    g1 = (3 * x3 == (a[x2 & 7] < 4));
    a[g0 & 7] = 4 * g1;
    x3++;
    for (i0 = 0; i0 < 2; i0++) {
        x0 = g2;
        g0 = 3;
    }
    if ((2 == x2) != 4) {
        g0 = (0 - x2 & 2);
        x1++;
        a[g2 & 7] = (a[x3 & 7] == g0);
    }
    x2 = ((x3 < g2) < 0 - 9);
    print_int(g2 % (1 + ((a[x2 & 7]) & 3)));
    if (x3 | a[g2 & 7] > 4) {
        a[x1 & 7] = a[g0 & 7] & g0;
    }
    if (4 | x2 < 3) {
        g2 = a[g1 & 7];
        a[x0 & 7] = x3 + g2;
    }
    x0 = (1 | x1 < x1);
    x0 = (x0 - 8 | x1);
    i0 = 0;
    do {
        print_int(a[x3 & 7]);
        i1 = 0;
        do {
            for (i2 = 0; i2 < 1; i2++) {
                x3 = h1(6 & 7, 1 % (1 + ((x0) & 3)));
            }
            x2++;
            x3 = a[g1 & 7];
            i1++;
        } while (i1 < 2);
        i0++;
    } while (i0 < 1);
    switch ((x3 == a[x0 & 7]) & 3) {
    case 0:
        print_int(a[g0 & 7] & x3);
        break;
    default:
        g1 = x0;
    }
    x3 = h0(x1 / (1 + ((a[g1 & 7]) & 3)), a[x3 & 7] * x1);
    bump(g2);
    x3 = (9 * x3 + a[x1 & 7] / (1 + ((0) & 3)));
    print_int(g0);
    print_int(a[x3 & 7] | a[x3 & 7]);
    x0 = (x3 + a[g2 & 7] ^ x2);
    x3 = h2(9, 3 * x2);
    x0 = g2;
    i0 = 0;
    while (i0 < 2) {
        if (x2 ^ 8 == 0) break;
        print_int(0);
        for (i1 = 0; i1 < 1; i1++) {
            x1 = h2(g0 * x0, (a[g1 & 7] == x2));
            print_int(g0 | 2);
        }
        x3 = (1 * g2 + x0);
        i0++;
    }
    a[7 & 7] = x2 & g1;
    i0 = 0;
    do {
        x0 = ((a[x2 & 7] == x2) + 5 * 0);
        i0++;
    } while (i0 < 3);
    g2 = (x2 | x2 == g0 + a[g2 & 7]);
    x3 = x3 & x2 / (1 + ((7 + x2) & 3));
    x1 = h2((6 < 2), a[x2 & 7] * a[x0 & 7]);
    x3++;
    for (i0 = 0; i0 < 2; i0++) {
        g0 = (x1 - g1);
        if (x3 * a[x2 & 7] > 1)
            x2 = h2(a[x2 & 7] % (1 + ((8) & 3)), x1);
        x3 = 8;
    }
    if ((0 < x1) == 9) {
        a[g2 & 7] = x3;
        x2++;
        x1--;
    } else {
        x2--;
        x2 = x1;
    }
    x2 = 6;
    g2 = 6 + x1 / (1 + ((x0) & 3));
    x3 = g2;
    g0 = (g0 == x0) / (1 + ((1 ^ x2) & 3));
    for (i0 = 0; i0 < 2; i0++) {
        x1 = ((x2 == 7) < (3 == a[x1 & 7]));
        x3 = h0(5 - a[x1 & 7], (x3 == 5));
        x3++;
    }
    i0 = 0;
    do {
        i1 = 0;
        while (i1 < 2) {
            x2 = (2 - a[x0 & 7] == a[x0 & 7] * g2);
            g2 = (x2 + x0);
            i1++;
        }
        i0++;
    } while (i0 < 3);
    i0 = 0;
    while (i0 < 2) {
        x2 = a[g2 & 7];
        if ((x1 < x2) == 2) break;
        i0++;
    }
    g1 = (5 == g1 % (1 + ((x2) & 3)));
    x2 = (g2 == g2 % (1 + ((9) & 3)));
    if (x0 - 1 > 0) {
        a[2 & 7] = a[x3 & 7] ^ x0;
        print_int(g1 * 2);
    }
    i0 = 0;
    while (i0 < 0) {
        if (a[x1 & 7] | 2 == 2) break;
        if (5 == 3) break;
        i0++;
    }
    print_int(g0);
    for (i0 = 0; i0 < 1; i0++) {
        print_int(x3);
        g2 = x3;
    }
    switch (4 & 3) {
    case 0:
        x2 = ((a[x0 & 7] == 5) * a[x3 & 7]);
        break;
    default:
        a[1 & 7] = (a[x3 & 7] == g1);
    }
    x2 = (g1 * 5 * 6);
    if (0 == 2) {
        switch ((a[g1 & 7] < g1) & 3) {
        case 0:
            a[a[g2 & 7] & 7] = 8 * x2;
            a[a[g0 & 7] & 7] = 2 + a[g1 & 7];
            break;
        default:
            print_int(x2);
        }
        print_int(9 + 3);
    }
    if (a[x2 & 7] - a[g0 & 7] != 8) {
        x2 = ((g0 == x3) + g2 ^ a[g2 & 7]);
        i0 = 0;
        do {
            bump(g1);
            print_int(7 | x2);
            x3--;
            i0++;
        } while (i0 < 2);
    }
    i0 = 0;
    do {
        if (x3 == 0) {
            bump((g1 == 2));
            x1 = h1(a[x0 & 7] * g1, a[x1 & 7]);
        }
        i0++;
    } while (i0 < 2);
    g0 = a[g0 & 7];
    x0++;
    x3 = ((a[x2 & 7] < a[x0 & 7]) == a[x0 & 7] / (1 + ((g1) & 3)));
    print_int(0);
    i0 = 0;
    do {
        x3--;
        i0++;
    } while (i0 < 2);
    a[g0 & 7] = 6;
    switch (0 | 0 & 3) {
    case 0:
        x2++;
        break;
    case 1:
        g0 = (a[g2 & 7] == a[x0 & 7]);
    case 2:
        g2 = 1;
        break;
    default:
        x2 = h2(x3, x0);
    }
    g1 = (a[x0 & 7] - x2);
    if (3 == 9) {
        x3 = 2;
        g1 = (a[x3 & 7] == a[x0 & 7]);
        a[4 & 7] = x2;
    } else {
        print_int(x0 - x2);
        a[a[x1 & 7] & 7] = 5;
        x1 = h1(a[g1 & 7] / (1 + ((a[x1 & 7]) & 3)), g2 & a[x0 & 7]);
    }
    if (g1 - x1 < 0)
        x1 = g1;
    bump(6 + a[x1 & 7]);
    bump(a[x3 & 7]);
    if (a[x2 & 7] > 1) {
        x2 = a[x2 & 7] % (1 + ((9 | 7) & 3));
        for (i0 = 0; i0 < 0; i0++) {
            for (i1 = 0; i1 < 3; i1++) {
                x1 = (x3 - (x0 < x3));
            }
            x3 = ((g2 < a[x0 & 7]) ^ x1 * 3);
        }
    } else {
        x0 = (a[g1 & 7] - a[x2 & 7] % (1 + ((x1) & 3)));
        bump(x2 - x2);
        a[x0 & 7] = x1 * g0;
    }
    switch (g0 % (1 + ((x1) & 3)) & 3) {
    case 0:
        a[3 & 7] = (g1 < 9);
        x2 = a[x2 & 7];
    default:
        x1 = 4 - g0 % (1 + ((a[x0 & 7] + x1) & 3));
    }
    x2 = ((a[x0 & 7] == x3) < a[g0 & 7]);
    g0 = (8 + 9);
    x1--;
    x3 = 5;
    print_int((g2 == 3));
    if (a[x3 & 7] * 6 > 6) {
        print_int(g0 / (1 + ((2) & 3)));
        x1 = (x2 + x3 - (a[x0 & 7] == x3));
        a[x3 & 7] = (x2 == 7);
        g1 = a[x1 & 7];
    }
    if (6 & 6 == 6) {
        for (i0 = 0; i0 < 0; i0++) {
            print_int(8 ^ g2);
        }
        print_int(a[x0 & 7] * x1);
        x0++;
    }
    a[2 & 7] = a[x2 & 7] | 4;
    if (7 != 2) {
        bump(a[x1 & 7] & a[g2 & 7]);
        x0 = (a[x0 & 7] * a[x0 & 7] == x0 * x0);
    } else {
        x3 = (g1 | (2 < x1));
        x0--;
        g1 = 2 * 2 % (1 + ((1 / (1 + ((x2) & 3))) & 3));
    }
    x3 = ((g1 < g1) ^ g1);
    x1--;
    g1 = g0 % (1 + ((a[x1 & 7] * a[x0 & 7]) & 3));
    g0 = x3;
    i0 = 0;
    do {
        x0 = a[x3 & 7] / (1 + ((7) & 3));
        i0++;
    } while (i0 < 3);
    x2++;
    x1 = (x3 | (g1 == g2));
    g1 = (2 + g0 | x2 & g0);
    x2 = x2;
    bump(a[g1 & 7] ^ 9);
    bump(x2 / (1 + ((x0) & 3)));
    x3 = ((a[g0 & 7] == 9) < x2);
    for (i0 = 0; i0 < 3; i0++) {
        a[a[x1 & 7] & 7] = a[x1 & 7] | x3;
        if (g1 == 0) break;
        g2 = a[x3 & 7] / (1 + ((x0 / (1 + ((x1) & 3))) & 3));
        print_int(a[g2 & 7] ^ 9);
        x3 = h2((g0 == a[x1 & 7]), (a[x1 & 7] < 3));
    }
    a[x2 & 7] = (x2 < a[x1 & 7]);
    switch (g0 ^ g1 & 3) {
    case 0:
        x1 = (2 / (1 + ((x3) & 3)) - 2 & a[g0 & 7]);
        x0 = ((x2 < x0) & x1);
        x0 = (a[g0 & 7] - g0 ^ a[g1 & 7]);
        break;
    default:
        g1 = a[g2 & 7];
    }
    if (a[g1 & 7] < 7)
        g2 = (a[x3 & 7] ^ x1 < x0 * g2);
    x1 = g2;
    x1 = g0;
    x3 = h2(x3 + x1, 0);
    i0 = 0;
    while (i0 < 1) {
        i1 = 0;
        do {
            print_int((x1 < a[x2 & 7]));
            a[7 & 7] = (a[g2 & 7] < a[x3 & 7]);
            i1++;
        } while (i1 < 3);
        if (a[x1 & 7] - x1 == 2) break;
        x2 = (2 + g2 & a[g0 & 7]);
        i0++;
    }
    return (x0 + x1) & 255;
}
