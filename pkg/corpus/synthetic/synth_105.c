extern void print_int(int v);

int g0 = 9;
int g1 = 5;
int g2 = 9;
int a[8] = {1, 0, 4, 8, 9, 5, 4, 2};

void bump(int d)
{
    g0 = g0 + d;
}

int h0(int u, int v)
{
    int t;
    t = (a[g0 & 7] == (g1 < a[v & 7]));
    if (t > 9) {
        return t - a[g1 & 7] % (1 + ((2) & 3));
    }
    return t + v;
}

int h1(int u, int v)
{
    int t;
    t = 4 % (1 + ((g2) & 3)) / (1 + ((g1 / (1 + ((a[u & 7]) & 3))) & 3));
    if (t > 18) {
        return t - (7 < a[v & 7]);
    }
    return t + v;
}

int h2(int u, int v)
{
    int t;
    t = a[v & 7];
    if (t > 4) {
        return t - u % (1 + ((g2) & 3));
    }
    return t + v;
}

int main(void)
{
    int x0, x1, x2, x3;
    int i0, i1, i2;
    x0 = 1;
    x1 = 8;
    x2 = 7;
    x3 = 6;
    i0 = 0;
    do {
        x1++;
        if (g1 % (1 + ((g2) & 3)) == 1) break;
        x0 = (4 < x2);
        i0++;
    } while (i0 < 0);
    x0 = (g2 - a[x2 & 7]);
    g2 = a[x1 & 7];
    i0 = 0;
    while (i0 < 2) {
        g1 = a[g2 & 7] - g2 % (1 + ((8 + 7) & 3));
        i0++;
    }
    g1 = g1;
    g1 = (a[g2 & 7] ^ g2 < x2);
    a[1 & 7] = x0;
    i0 = 0;
    while (i0 < 0) {
        x0++;
        x0 = h0((g2 == 7), x0 * g2);
        x3 = (g1 + g0);
        i0++;
    }
    for (i0 = 0; i0 < 0; i0++) {
        switch (a[g0 & 7] + x3 & 3) {
        case 0:
            a[9 & 7] = a[g0 & 7] * 1;
            break;
        case 1:
            g0 = (x0 / (1 + ((6) & 3)) * x3 / (1 + ((x3) & 3)));
            break;
        case 2:
            bump((x0 == a[x1 & 7]));
            break;
        default:
            x3--;
        }
    }
    i0 = 0;
    do {
        if (a[g1 & 7] % (1 + ((x2) & 3)) == 9) {
            if (g2 == 3) break;
        }
        x3 = 6;
        print_int(a[x3 & 7]);
        i0++;
    } while (i0 < 2);
    switch (x0 & 3) {
    case 0:
        x1 = (9 + 8);
        break;
    case 1:
        x3 = x3;
        break;
    case 2:
        x1 = g1;
    default:
        bump(8);
    }
    switch (g1 * a[x3 & 7] & 3) {
    case 0:
        x3--;
        a[3 & 7] = g1 ^ 7;
        break;
    case 1:
        x1++;
    default:
        a[x2 & 7] = a[g2 & 7];
    }
    x1--;
    x2--;
    g2 = (a[g1 & 7] & g0 - 8);
    if (a[g0 & 7] * g0 > 8) {
        a[1 & 7] = g0;
        g0 = x1;
        g1 = 0;
    }
    g2 = 3;
    x1 = x1;
    print_int(a[x3 & 7] & a[x1 & 7]);
    a[a[g0 & 7] & 7] = 0 / (1 + ((x3) & 3));
    for (i0 = 0; i0 < 0; i0++) {
        if (g2 + x2 == 0) break;
        i1 = 0;
        while (i1 < 2) {
            x1 = (7 * 2 - 3);
            x3 = h1((a[x1 & 7] < a[g2 & 7]), x2 & g0);
            x2 = (g1 % (1 + ((8) & 3)) & g2);
            i1++;
        }
    }
    x1 = a[g1 & 7];
    i0 = 0;
    while (i0 < 2) {
        x2 = 9 % (1 + ((g2) & 3));
        if (x0 & x1 == 3) break;
        x0 = h1(1 % (1 + ((x0) & 3)), g2 / (1 + ((x2) & 3)));
        i0++;
    }
    print_int((4 == a[g0 & 7]));
    a[a[x2 & 7] & 7] = g0 & x1;
    print_int(a[x3 & 7] * x2);
    x3 = (a[x3 & 7] ^ x1);
    i0 = 0;
    do {
        x2 = a[x1 & 7];
        g0 = (g1 ^ x3 * (a[x1 & 7] < g2));
        x0 = (g0 ^ g2 * g1 ^ a[x1 & 7]);
        i0++;
    } while (i0 < 0);
    x3 = (g2 | a[x2 & 7] ^ a[x1 & 7] / (1 + ((a[x3 & 7]) & 3)));
    x0 = ((x0 < 1) | x1 | a[x0 & 7]);
    if (x1 < 9) {
        if (g1 & x2 < 3) {
            g2 = g1 % (1 + ((7 / (1 + ((9) & 3))) & 3));
            x0 = 5;
        }
        x2 = 2;
    } else {
        a[g1 & 7] = a[x0 & 7];
        x1 = (x3 * 4 ^ 3);
        x1--;
        x2--;
    }
    a[g0 & 7] = g2 * x3;
    x0 = 6;
    g2 = (a[x0 & 7] < a[x1 & 7] / (1 + ((0) & 3)));
    x1 = a[g2 & 7];
    x0 = (a[x2 & 7] + a[x1 & 7] - 8);
    x1 = (a[g1 & 7] < (a[x3 & 7] < a[g2 & 7]));
    x3++;
    a[x3 & 7] = (g0 < a[x3 & 7]);
    x0 = (a[g0 & 7] == x0 ^ g1);
    print_int((x0 == 8));
    x2 = (a[x1 & 7] - x2 == (7 == a[g0 & 7]));
    switch (a[x2 & 7] & 3) {
    case 0:
        a[2 & 7] = (8 < 6);
    default:
        x3 = (g0 < 4 - 4);
    }
    x2 = (x2 & x3 - (3 == 2));
    g1 = (1 & (g1 < a[x0 & 7]));
    i0 = 0;
    do {
        x3++;
        i1 = 0;
        while (i1 < 0) {
            print_int(g1 % (1 + ((a[g0 & 7]) & 3)));
            i1++;
        }
        x2 = (x3 % (1 + ((x2) & 3)) | x0 % (1 + ((a[g1 & 7]) & 3)));
        i0++;
    } while (i0 < 1);
    x3 = h2(x3 & a[g0 & 7], x3 / (1 + ((8) & 3)));
    g2 = (x0 / (1 + ((7) & 3)) & a[g0 & 7]);
    bump(x2);
    if (6 / (1 + ((4) & 3)) < 3) {
        print_int(1);
    }
    g0 = (x1 == x1);
    for (i0 = 0; i0 < 0; i0++) {
        g2 = (a[x1 & 7] ^ 6 | a[x1 & 7] % (1 + ((x2) & 3)));
        x1 = (2 * 8 | 4 & x3);
        x1 = x3;
        x0 = (5 * x0);
    }
    i0 = 0;
    while (i0 < 3) {
        i1 = 0;
        while (i1 < 0) {
            g0 = (x2 & x2 & a[x0 & 7] + a[g2 & 7]);
            i1++;
        }
        i0++;
    }
    i0 = 0;
    do {
        i1 = 0;
        while (i1 < 0) {
            if (8 < 4) {
                g2 = (g0 & 9 - (x3 == g0));
                x2 = h2(a[g1 & 7], (g1 < 2));
            } else {
                g1 = (2 < 9) % (1 + ((x0 / (1 + ((7) & 3))) & 3));
            }
            i1++;
        }
        i0++;
    } while (i0 < 2);
    print_int(5);
    if (4 < 8) {
        bump(a[x0 & 7] & 7);
        x3 = (a[x1 & 7] * g0 * g2);
    }
    for (i0 = 0; i0 < 0; i0++) {
        print_int(a[g1 & 7]);
    }
    for (i0 = 0; i0 < 2; i0++) {
        x1 = 9;
        if (x3 == 1) break;
        a[x0 & 7] = 0 * 1;
    }
    i0 = 0;
    do {
        x3 = (x3 / (1 + ((7) & 3)) | g2 | 9);
        i1 = 0;
        while (i1 < 1) {
            x2--;
            i1++;
        }
        i0++;
    } while (i0 < 2);
    if (x0 + 1 > 4) {
        bump(a[x0 & 7]);
        x0 = (0 | g1 + x2);
        g2 = g2;
        g1 = x1;
    } else {
        bump(5);
        x1 = h1(6, 3);
        g0 = 1 & a[x1 & 7] % (1 + ((x3 / (1 + ((g0) & 3))) & 3));
    }
    i0 = 0;
    while (i0 < 3) {
        x2 = a[x0 & 7];
        g2 = 5;
        x0--;
        g1 = a[g2 & 7];
        i0++;
    }
    for (i0 = 0; i0 < 2; i0++) {
        if (x2 ^ g2 == 0) break;
        bump(x1);
    }
    a[7 & 7] = (x0 == 8);
    x0 = h2(a[x2 & 7] % (1 + ((a[x0 & 7]) & 3)), g0 & 5);
    if (a[g2 & 7] * x0 == 6) {
        x0--;
        x3 = (a[x3 & 7] ^ a[g0 & 7]);
        x3 = (g2 & x0 & (g0 < a[x0 & 7]));
        i0 = 0;
        while (i0 < 1) {
            a[7 & 7] = 2 + a[x0 & 7];
            x0++;
            i0++;
        }
    } else {
        x0 = x3;
        x3 = 4;
    }
    for (i0 = 0; i0 < 2; i0++) {
        if (4 == 0) continue;
        for (i1 = 0; i1 < 3; i1++) {
            x0 = (g0 == 7 & a[g0 & 7]);
            x0 = (9 * g1 + (x2 == x3));
        }
    }
    if (g1 - a[g0 & 7] == 8) {
        g0 = (x2 - x2 * a[x0 & 7] % (1 + ((a[x2 & 7]) & 3)));
        print_int(1);
        i0 = 0;
        while (i0 < 3) {
            x3 = (x3 - x0 * a[g2 & 7]);
            x0 = (5 ^ a[x1 & 7] - g2 % (1 + ((g1) & 3)));
            i0++;
        }
    } else {
        x2++;
        x3 = 7 % (1 + ((x2) & 3)) / (1 + ((x3) & 3));
        g2 = ((g0 == 1) < a[g0 & 7] * g1);
    }
    x2 = (a[g1 & 7] == g2 * x2);
    i0 = 0;
    while (i0 < 0) {
        a[4 & 7] = g1;
        x0++;
        if (1 / (1 + ((9) & 3)) == 5) {
            print_int(a[x2 & 7] / (1 + ((x0) & 3)));
        } else {
            x1 = g2;
        }
        i0++;
    }
    x3 = a[g1 & 7];
    print_int(3);
    g2 = a[g1 & 7];
    switch (x3 | g0 & 3) {
    case 0:
        print_int(7);
        x3 = a[x0 & 7];
        break;
    case 1:
        x1++;
        break;
    default:
        g0 = (3 & x3 / (1 + ((a[x0 & 7]) & 3)));
    }
    a[6 & 7] = (x3 < 6);
    x3 = 2;
    if (g1 - a[x2 & 7] < 2)
        x1 = (g0 | 6 % (1 + ((2) & 3)));
    g0 = x1 ^ a[g2 & 7] / (1 + ((g0 - x1) & 3));
    if (x3 & 0 != 1) {
        if (x0 ^ g2 == 1) {
            a[a[x0 & 7] & 7] = x0 | a[x2 & 7];
            g1 = x2;
        } else {
            x2 = (g0 & g1 + 1 - 5);
        }
        print_int(2);
    }
    g1 = g2 * a[x0 & 7] / (1 + ((g2) & 3));
    print_int(g1 ^ 4);
    for (i0 = 0; i0 < 1; i0++) {
        for (i1 = 0; i1 < 0; i1++) {
            g1 = ((x0 == g1) & a[g0 & 7]);
            print_int(g0 | 0);
            a[x1 & 7] = a[x0 & 7];
        }
        g1 = x0;
    }
    i0 = 0;
    while (i0 < 1) {
        a[6 & 7] = g1 + x0;
        if (8 | a[g1 & 7] == 0) break;
        x1--;
        x1 = x3 % (1 + (((x1 < g0)) & 3));
        i0++;
    }
    print_int(8 ^ a[x0 & 7]);
    g1 = (a[g2 & 7] * 7 ^ a[g0 & 7] ^ 2);
    switch (a[g0 & 7] & 3) {
    case 0:
        x0 = (g2 + 6 ^ 0 - x0);
        x0 = h1(x2 % (1 + ((7) & 3)), x2 * 0);
        break;
    default:
        x0 = a[g2 & 7];
    }
    print_int(x3 & a[x3 & 7]);
    if (x0 > 6) {
        x3 = (x3 % (1 + ((g0) & 3)) + 3 - a[x2 & 7]);
        i0 = 0;
        while (i0 < 3) {
            i1 = 0;
            do {
                g1 = x1 % (1 + ((a[x3 & 7]) & 3)) % (1 + (((g0 == g0)) & 3));
                i1++;
            } while (i1 < 3);
            i0++;
        }
    } else {
        g1 = (0 | a[x3 & 7] ^ 1);
    }
    g0 = (a[x1 & 7] / (1 + ((a[x3 & 7]) & 3)) < 3 | a[x1 & 7]);
    if (x0 < 8) {
        g0 = a[g2 & 7];
        a[g0 & 7] = 5 | a[x3 & 7];
        x0--;
    }
    switch (3 - x3 & 3) {
    case 0:
        x0 = x0;
    case 1:
        g2 = (x3 - (x3 == x0));
        break;
    default:
        x2++;
    }
    i0 = 0;
    while (i0 < 2) {
        x3--;
        i0++;
    }
    print_int((a[x0 & 7] < a[g0 & 7]));
    if (x1 ^ a[x1 & 7] == 0) {
        x2 = (x1 - 9 == (9 == g1));
        bump(g2);
        x3 = (x0 % (1 + ((a[x1 & 7]) & 3)) + a[g2 & 7] + 8);
    }
    x1 = 8;
    x0 = a[x3 & 7];
    a[g0 & 7] = x0 % (1 + ((9) & 3));
    i0 = 0;
    do {
        bump(x2 & x3);
        g1 = (a[x0 & 7] < 0 + x2);
        g0 = g0;
        i0++;
    } while (i0 < 3);
    for (i0 = 0; i0 < 0; i0++) {
        x0 = (6 & x1 * g0 / (1 + ((a[x0 & 7]) & 3)));
        print_int(a[g0 & 7]);
        bump(x0 & x1);
    }
    x2++;
    x3 = (a[x1 & 7] + 6);
    for (i0 = 0; i0 < 1; i0++) {
        x3 = 0;
        x1--;
        x2 = a[g0 & 7] / (1 + ((0) & 3)) / (1 + ((a[g1 & 7]) & 3));
        g2 = (a[g0 & 7] ^ a[x2 & 7] / (1 + ((a[g1 & 7]) & 3)));
    }
    g1 = (x1 + g2);
    i0 = 0;
    do {
        g2 = ((a[g1 & 7] < 5) ^ 4);
        i0++;
    } while (i0 < 3);
    bump((a[x1 & 7] < g0));
    print_int(g1 / (1 + ((x0) & 3)));
    x0 = (2 < a[x2 & 7] + a[x2 & 7]);
    bump(x1 + 2);
    a[g1 & 7] = g1 + g0;
    x3 = 0 * x0 / (1 + ((5 % (1 + ((g2) & 3))) & 3));
    if (4 - a[x2 & 7] < 6) {
        i0 = 0;
        do {
            x0 = g2 + a[x3 & 7] / (1 + ((a[g2 & 7] - a[g2 & 7]) & 3));
            x0 = 7 % (1 + ((g0) & 3)) % (1 + ((g0) & 3));
            if (a[g1 & 7] + g0 == 3) break;
            g0 = (9 & x2 & g0 + 1);
            i0++;
        } while (i0 < 1);
    }
    switch (x3 - 0 & 3) {
    case 0:
        i0 = 0;
        while (i0 < 3) {
            if (x3 == 1) break;
            i0++;
        }
        break;
    case 1:
        x3--;
        break;
    case 2:
        a[a[x0 & 7] & 7] = x3 & x0;
        break;
    default:
        g2 = (g0 & x3 ^ 0);
    }
    x1 = (a[x3 & 7] < (x0 == x2));
    x1 = 7 % (1 + ((x2 / (1 + ((9) & 3))) & 3));
    switch (2 % (1 + ((a[x2 & 7]) & 3)) & 3) {
    case 0:
        x1 = h1(g2, a[g2 & 7]);
        break;
    case 1:
        print_int(a[x0 & 7]);
    case 2:
        bump(4 / (1 + ((x0) & 3)));
        break;
    default:
        x1--;
    }
    i0 = 0;
    while (i0 < 3) {
        if (g1 == 6) {
            if (1 - g0 == 0) {
                x0 = h0(g1, 3);
                g2 = a[g2 & 7] % (1 + ((2) & 3));
            }
            x3 = h2(a[g2 & 7] | 5, x1 ^ x3);
        }
        print_int(a[g1 & 7]);
        i0++;
    }
    x0 = (a[x1 & 7] | a[x3 & 7] % (1 + ((a[x3 & 7]) & 3)));
    x3 = (9 * x2 < (x2 < a[x2 & 7]));
    x1 = h0(a[x1 & 7], a[x1 & 7]);
    for (i0 = 0; i0 < 1; i0++) {
        g2 = x1;
    }
    i0 = 0;
    while (i0 < 2) {
        g1 = (a[g0 & 7] | a[x2 & 7] < x0 & g1);
        if ((x3 == g2) == 1) break;
        i0++;
    }
    g1 = a[g2 & 7];
    i0 = 0;
    while (i0 < 2) {
        a[x2 & 7] = g0;
        print_int(a[g0 & 7] - g2);
        i0++;
    }
    x0 = (g0 % (1 + ((a[g0 & 7]) & 3)) < g0 * x2);
    bump(5 ^ a[x3 & 7]);
    if (8 + x3 < 5) {
        i0 = 0;
        while (i0 < 2) {
            a[4 & 7] = x3 + 1;
            i0++;
        }
        x0 = (a[g2 & 7] - g1);
    } else {
        if (a[x1 & 7] != 8)
            x2 = (x0 | g0 - a[x2 & 7] / (1 + ((7) & 3)));
        g1 = 2;
    }
    if (3 != 7) {
        if (5 - g0 > 2) {
            i0 = 0;
            while (i0 < 1) {
                g2 = (x2 - a[g1 & 7] - x0);
                i0++;
            }
            x0 = (7 + a[x0 & 7] == 0);
        }
    }
    bump(a[g0 & 7]);
    x2 = (8 - x2 | x0);
    i0 = 0;
    do {
        x0 = (g0 & (2 == a[x3 & 7]));
        i1 = 0;
        while (i1 < 1) {
            g1 = 1;
            bump((4 == x3));
            i1++;
        }
        i0++;
    } while (i0 < 1);
    i0 = 0;
    do {
        for (i1 = 0; i1 < 1; i1++) {
            x3 = h1(g1 % (1 + ((x3) & 3)), x3);
            x3++;
        }
        i0++;
    } while (i0 < 2);
    print_int(g0 * x1);
    i0 = 0;
    do {
        for (i1 = 0; i1 < 3; i1++) {
            x1 = g0;
            g1 = (a[x3 & 7] < x2);
            g2 = g1 * x0 / (1 + ((g2 & g0) & 3));
        }
        i0++;
    } while (i0 < 1);
    i0 = 0;
    while (i0 < 0) {
        g2 = (x3 % (1 + ((1) & 3)) - g2 * g1);
        a[g0 & 7] = (6 == 7);
        i0++;
    }
    x1--;
    g0 = 9;
    g1 = g1 % (1 + ((a[x1 & 7] * 2) & 3));
    for (i0 = 0; i0 < 3; i0++) {
        x1 = x1 % (1 + ((g1) & 3));
        g2 = a[g1 & 7];
        x0 = x0;
    }
    g1 = ((g2 < 1) - x2);
    x0 = (0 & x1 & x1);
    x1--;
    x3 = (x2 ^ g0 * g2 % (1 + ((0) & 3)));
    g2 = (x2 == 8);
    a[a[g0 & 7] & 7] = a[x0 & 7] % (1 + ((x3) & 3));
    i0 = 0;
    do {
        i1 = 0;
        while (i1 < 1) {
            bump(2);
            x2++;
            x0--;
            x3--;
            i1++;
        }
        i0++;
    } while (i0 < 1);
    x1 = a[g0 & 7];
    g0 = (g0 | a[x2 & 7] < a[g1 & 7]);
    x2 = (x1 < x1);
    if (x2 != 8) {
        x3++;
        x1++;
        print_int(x3 | g0);
        x1 = (g2 * 0 * a[x2 & 7] | x1);
    }
    if (x2 - x2 != 3) {
        x0 = g0;
        a[a[g0 & 7] & 7] = x3;
    }
    bump(2 * g2);
    g1 = (6 ^ a[x1 & 7] - a[x1 & 7] + a[x1 & 7]);
    g0 = (a[x3 & 7] == g2) / (1 + ((g2) & 3));
    x2 = (7 & 4 & 4 % (1 + ((8) & 3)));
    switch (a[x1 & 7] & x1 & 3) {
    case 0:
        i0 = 0;
        while (i0 < 1) {
            print_int(g2 - x0);
            i0++;
        }
        break;
    case 1:
        g0 = x3 + x3 % (1 + ((3) & 3));
        break;
    default:
        x0 = h1(g1 ^ x0, g2 - g1);
    }
    x3 = (g1 & x1 & x1 | g1);
    for (i0 = 0; i0 < 1; i0++) {
        if (x1 == 1) break;
        x3++;
        i1 = 0;
        do {
            a[x1 & 7] = g2 - x0;
            x2 = (x0 | g0 + 5);
            i1++;
        } while (i1 < 0);
    }
    if (a[x2 & 7] % (1 + ((a[x0 & 7]) & 3)) != 7)
        x3 = h1(a[g2 & 7] / (1 + ((x1) & 3)), x2 - a[g0 & 7]);
    print_int(6 / (1 + ((1) & 3)));
    x3 = h1(a[x3 & 7] * x2, a[x3 & 7]);
    print_int(x0);
    i0 = 0;
    while (i0 < 3) {
        if (0 ^ 5 == 0) break;
        x2--;
        i0++;
    }
    i0 = 0;
    while (i0 < 1) {
        a[g0 & 7] = 4 / (1 + ((6) & 3));
        i0++;
    }
    if ((a[g0 & 7] < g1) < 4) {
        x2 = x2 - 7 / (1 + ((g1 & g0) & 3));
    } else {
        g2 = (g1 | 5 | 0);
    }
    g2 = x3;
    switch (a[g0 & 7] & 3) {
    case 0:
        a[a[g2 & 7] & 7] = (a[g2 & 7] == 1);
        x1++;
    case 1:
        x2++;
        break;
    case 2:
        x0 = a[x2 & 7] ^ a[g0 & 7] / (1 + ((6) & 3));
        break;
    default:
        x0 = (a[g1 & 7] | (x2 < a[x0 & 7]));
    }
    x3 = (5 | 2 == x1);
    switch ((a[g2 & 7] == 2) & 3) {
    case 0:
        x2 = g1;
        print_int(x1);
        break;
    default:
        g2 = a[x2 & 7];
    }
    g1 = 8 / (1 + ((5 + x3) & 3));
    g0 = g1;
    i0 = 0;
    do {
        if (x1 + 6 > 2) {
            x3 = 7;
        }
        x0 = h2(g0 ^ g2, a[g0 & 7] * 7);
        i0++;
    } while (i0 < 0);
    switch (g2 & 3) {
    case 0:
        x0 = (g2 - 3 ^ x3 * x1);
        x1++;
        break;
    case 1:
        g0 = x0;
        break;
    default:
        x0++;
    }
    switch (x3 * x2 & 3) {
    case 0:
        a[6 & 7] = 2;
        break;
    case 1:
        x0 = ((x0 == a[g1 & 7]) ^ 5);
        break;
    default:
        print_int(a[g0 & 7]);
    }
    bump(a[g1 & 7] & a[g1 & 7]);
    g1 = x0;
    if (8 < 3) {
        for (i0 = 0; i0 < 3; i0++) {
            g0 = 1;
            if (a[x2 & 7] | a[x1 & 7] == 3) continue;
        }
    } else {
        print_int(2 - 4);
    }
    if (a[g2 & 7] != 5) {
        x1 = (7 ^ a[x0 & 7] + g2);
        i0 = 0;
        while (i0 < 3) {
            i1 = 0;
            do {
                x1--;
                x0 = (9 == 9);
                i1++;
            } while (i1 < 3);
            i0++;
        }
    }
    x0 = (1 & a[x1 & 7] - 0);
    x1--;
    if (x0 ^ 3 < 7) {
        x1 = (2 | 8 ^ 4);
        print_int(a[g2 & 7] ^ g1);
        x0++;
        x3 = 4;
    } else {
        bump(g1);
    }
    switch (a[x1 & 7] & 3) {
    case 0:
        g1 = (6 | x0 & 1);
        print_int(a[g0 & 7] + 2);
        break;
    case 1:
        g2 = (a[x1 & 7] - (x0 < x1));
    case 2:
        x3 = h0(x2 % (1 + ((g0) & 3)), g2);
    default:
        x2 = 3;
    }
    x2--;
    i0 = 0;
    while (i0 < 3) {
        bump(x0 | 7);
        x3++;
        i0++;
    }
    bump(a[x3 & 7]);
    return (x0 + x1) & 255;
}
