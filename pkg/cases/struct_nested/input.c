struct inner {
    int a;
    char tag;
};

struct outer {
    struct inner inr;
    int b;
};

int main(void)
{
    struct outer o;
    o.inr.a = 5;
    o.inr.tag = 'z';
    o.b = o.inr.a * 3;
    return o.b;
}
